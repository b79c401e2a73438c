/*
 * Copyright (C) 2026 The hyperholo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hyperholo/hyperholo.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "hyperholo/bergman.hpp"
#include "hyperholo/cauchy.hpp"
#include "hyperholo/error.hpp"
#include "hyperholo/experiment.hpp"
#include "hyperholo/kernels.hpp"
#include "hyperholo/moebius.hpp"
#include "hyperholo/operators.hpp"

using namespace hyperholo;

struct hh_psi {
  StructuralSet value;
};
struct hh_field {
  QuaternionField value;
};
struct hh_dictionary {
  Dictionary value;
};
struct hh_domain {
  Domain4 value;
};
struct hh_moebius {
  MoebiusMap value;
};
struct hh_subspace_kernel {
  SubspaceKernel value;
};

namespace {

thread_local std::string last_error;

Quaternion from_c(const hh_quat& q) { return {q.q[0], q.q[1], q.q[2], q.q[3]}; }

hh_quat to_c(const Quaternion& q) { return {{q.q0, q.q1, q.q2, q.q3}}; }

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
hh_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return HH_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<hh_status>(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return HH_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HH_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return HH_INTERNAL;
  }
}

template <typename T>
void require(const T* p, const char* name) {
  if (!p) throw InvalidArgument(std::string(name) + " is null");
}

Resolution resolution_from(const char* json, const Resolution& fallback) {
  if (!json) return fallback;
  return Resolution::from_json(nlohmann::json::parse(json));
}

}  // namespace

extern "C" {

const char* hh_version(void) { return "0.1.0"; }

const char* hh_last_error(void) { return last_error.c_str(); }

void hh_string_free(char* s) { std::free(s); }

hh_quat hh_quat_mul(hh_quat a, hh_quat b) { return to_c(from_c(a) * from_c(b)); }

hh_quat hh_quat_conj(hh_quat a) { return to_c(conj(from_c(a))); }

double hh_quat_norm(hh_quat a) { return norm(from_c(a)); }

hh_status hh_quat_inverse(hh_quat a, hh_quat* out) {
  return guarded([&] {
    require(out, "out");
    *out = to_c(inverse(from_c(a)));
  });
}

hh_status hh_psi_create(const hh_quat frame[4], hh_psi** out) {
  return guarded([&] {
    require(frame, "frame");
    require(out, "out");
    std::array<Quaternion, 4> f;
    for (size_t k = 0; k < 4; ++k) f[k] = from_c(frame[k]);
    *out = new hh_psi{StructuralSet(f)};
  });
}

hh_status hh_psi_from_json(const char* json, hh_psi** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error&) {
      j = std::string(json);  // bare names such as cimmino
    }
    *out = new hh_psi{structural_set_from_json(j)};
  });
}

void hh_psi_free(hh_psi* psi) { delete psi; }

int hh_psi_sign(const hh_psi* psi) { return psi ? psi->value.sign() : 0; }

hh_status hh_psi_coords(const hh_psi* psi, hh_quat q, double out[4]) {
  return guarded([&] {
    require(psi, "psi");
    require(out, "out");
    const PsiCoords c = psi_coords(from_c(q), psi->value);
    for (int k = 0; k < 4; ++k) out[k] = c[k];
  });
}

hh_status hh_pairing(const hh_psi* psi, hh_quat q, hh_quat x, double* out) {
  return guarded([&] {
    require(psi, "psi");
    require(out, "out");
    *out = pairing(from_c(q), from_c(x), psi->value);
  });
}

hh_status hh_domain_from_json(const char* json, hh_domain** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new hh_domain{Domain4::from_json(nlohmann::json::parse(json))};
  });
}

void hh_domain_free(hh_domain* d) { delete d; }

hh_status hh_domain_contains(const hh_domain* d, hh_quat x, int* out) {
  return guarded([&] {
    require(d, "domain");
    require(out, "out");
    *out = d->value.contains(from_c(x)) ? 1 : 0;
  });
}

hh_status hh_field_constant(hh_quat value, hh_field** out) {
  return guarded([&] {
    require(out, "out");
    *out = new hh_field{constant_field(from_c(value))};
  });
}

hh_status hh_field_identity(hh_field** out) {
  return guarded([&] {
    require(out, "out");
    *out = new hh_field{identity_field()};
  });
}

hh_status hh_field_fueter_variable(int k, const hh_psi* psi, hh_field** out) {
  return guarded([&] {
    require(psi, "psi");
    require(out, "out");
    *out = new hh_field{fueter_variable(k, psi->value)};
  });
}

hh_status hh_field_random_polynomial(uint64_t seed, double scale,
                                     hh_field** out) {
  return guarded([&] {
    require(out, "out");
    Rng rng(seed);
    *out = new hh_field{random_polynomial(rng, scale)};
  });
}

hh_status hh_field_exp_modulate(const hh_field* g, hh_quat q,
                                const hh_psi* psi, hh_field** out) {
  return guarded([&] {
    require(g, "g");
    require(psi, "psi");
    require(out, "out");
    *out = new hh_field{exp_modulate(g->value, from_c(q), psi->value)};
  });
}

hh_status hh_field_kernel(hh_quat pole, hh_quat q, const hh_psi* psi,
                          hh_field** out) {
  return guarded([&] {
    require(psi, "psi");
    require(out, "out");
    *out = new hh_field{kernel_field(from_c(pole), from_c(q), psi->value)};
  });
}

void hh_field_free(hh_field* f) { delete f; }

hh_status hh_field_eval(const hh_field* f, hh_quat x, hh_quat* out) {
  return guarded([&] {
    require(f, "field");
    require(out, "out");
    *out = to_c(f->value(from_c(x)));
  });
}

hh_status hh_field_label(const hh_field* f, char** out) {
  return guarded([&] {
    require(f, "field");
    require(out, "out");
    *out = duplicate(f->value.label());
  });
}

hh_status hh_field_apply(const hh_field* f, hh_side side, hh_quat q,
                         const hh_psi* psi, hh_quat x, double h,
                         hh_quat* out) {
  return guarded([&] {
    require(f, "field");
    require(psi, "psi");
    require(out, "out");
    const OperatorKind kind = side == HH_RIGHT ? OperatorKind::right(from_c(q))
                                               : OperatorKind::left(from_c(q));
    DiffOptions diff;
    if (h > 0.0) {
      diff.h = h;
      diff.mode = DerivativeMode::finite_difference;
    }
    *out = to_c(apply(kind, f->value, from_c(x), psi->value, diff));
  });
}

hh_status hh_cauchy_kernel(hh_quat y, hh_quat x, hh_quat q, const hh_psi* psi,
                           hh_quat* out) {
  return guarded([&] {
    require(psi, "psi");
    require(out, "out");
    *out = to_c(cauchy_kernel_q(from_c(y), from_c(x), from_c(q), psi->value));
  });
}

hh_status hh_cauchy_reconstruct(const hh_field* f, hh_quat q,
                                const hh_psi* psi, const hh_domain* d,
                                hh_quat x, const char* resolution_json,
                                hh_quat* out) {
  return guarded([&] {
    require(f, "field");
    require(psi, "psi");
    require(d, "domain");
    require(out, "out");
    const Resolution res = resolution_from(resolution_json, Resolution{});
    *out = to_c(cauchy_reconstruct(f->value, from_c(q), psi->value, d->value,
                                   from_c(x), res));
  });
}

hh_status hh_dictionary_from_json(const char* json, hh_dictionary** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new hh_dictionary{dictionary_from_json(nlohmann::json::parse(json))};
  });
}

void hh_dictionary_free(hh_dictionary* d) { delete d; }

size_t hh_dictionary_size(const hh_dictionary* d) {
  return d ? d->value.size() : 0;
}

hh_status hh_dictionary_entry(const hh_dictionary* d, size_t i,
                              hh_field** out) {
  return guarded([&] {
    require(d, "dictionary");
    require(out, "out");
    if (i >= d->value.size()) throw InvalidArgument("entry index out of range");
    *out = new hh_field{d->value[i]};
  });
}

hh_status hh_dictionary_to_json(const hh_dictionary* d, char** out) {
  return guarded([&] {
    require(d, "dictionary");
    require(out, "out");
    *out = duplicate(to_json(d->value).dump());
  });
}

hh_status hh_moebius_create(hh_quat a, hh_quat b, hh_quat c, hh_quat d,
                            hh_moebius** out) {
  return guarded([&] {
    require(out, "out");
    *out = new hh_moebius{
        MoebiusMap(from_c(a), from_c(b), from_c(c), from_c(d))};
  });
}

void hh_moebius_free(hh_moebius* t) { delete t; }

hh_status hh_moebius_apply(const hh_moebius* t, hh_quat x, hh_quat* out) {
  return guarded([&] {
    require(t, "map");
    require(out, "out");
    *out = to_c(t->value(from_c(x)));
  });
}

hh_status hh_moebius_inverse(const hh_moebius* t, hh_quat y, hh_quat* out) {
  return guarded([&] {
    require(t, "map");
    require(out, "out");
    *out = to_c(t->value.inverse(from_c(y)));
  });
}

hh_status hh_subspace_kernel_create(const hh_dictionary* dict,
                                    const hh_domain* d,
                                    const char* resolution_json,
                                    hh_subspace_kernel** out) {
  return guarded([&] {
    require(dict, "dictionary");
    require(d, "domain");
    require(out, "out");
    const Resolution res =
        resolution_from(resolution_json, InnerProductSpec::default_resolution());
    const auto& dv = dict->value;
    *out = new hh_subspace_kernel{SubspaceKernel(
        dv.entries, InnerProductSpec::lambda(d->value, dv.q, dv.psi, res))};
  });
}

void hh_subspace_kernel_free(hh_subspace_kernel* k) { delete k; }

size_t hh_subspace_kernel_rank(const hh_subspace_kernel* k) {
  return k ? k->value.rank() : 0;
}

hh_status hh_subspace_kernel_eval(const hh_subspace_kernel* k, hh_quat x,
                                  hh_quat xi, hh_quat* out) {
  return guarded([&] {
    require(k, "kernel");
    require(out, "out");
    *out = to_c(k->value(from_c(x), from_c(xi)));
  });
}

hh_status hh_subspace_kernel_to_json(const hh_subspace_kernel* k, char** out) {
  return guarded([&] {
    require(k, "kernel");
    require(out, "out");
    *out = duplicate(k->value.to_json().dump());
  });
}

hh_status hh_list_checks(char** out) {
  return guarded([&] {
    require(out, "out");
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : check_registry()) {
      j.push_back({{"name", c.name}, {"description", c.description}});
    }
    *out = duplicate(j.dump());
  });
}

hh_status hh_parse_config(const char* text, char** out) {
  return guarded([&] {
    require(text, "text");
    const ExperimentConfig cfg = parse_config(text);
    if (out) {
      nlohmann::json j = cfg.settings.to_json();
      j["checks"] = cfg.checks;
      *out = duplicate(j.dump());
    }
  });
}

hh_status hh_run_check(const char* name, const char* settings_json, char** out,
                       int* pass) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    if (!is_check(name)) {
      throw InvalidArgument(std::string("unknown check '") + name + "'");
    }
    nlohmann::json j = nlohmann::json::object();
    if (settings_json) {
      try {
        j = nlohmann::json::parse(settings_json);
      } catch (const nlohmann::json::parse_error&) {
        parse_config(settings_json);  // rethrows with line and column
      }
    }
    j["checks"] = nlohmann::json::array({name});
    const ExperimentConfig cfg = config_from_json(j);
    const Report rep = run_check(name, cfg.settings);
    *out = duplicate(rep.to_json().dump(2));
    if (pass) *pass = rep.pass ? 1 : 0;
  });
}

hh_status hh_run_config(const char* text, int jobs, int timings, char** out,
                        int* all_pass) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    const ExperimentConfig cfg = parse_config(text);
    const auto reports = run_experiment(cfg, {jobs, timings != 0});
    nlohmann::json j = nlohmann::json::array();
    bool ok = true;
    for (const auto& r : reports) {
      j.push_back(r.to_json());
      ok = ok && r.pass;
    }
    *out = duplicate(j.dump(2));
    if (all_pass) *all_pass = ok ? 1 : 0;
  });
}

hh_status hh_summary(const char* reports_json, const char* format, char** out) {
  return guarded([&] {
    require(reports_json, "reports_json");
    require(out, "out");
    const auto j = nlohmann::json::parse(reports_json);
    std::vector<Report> reports;
    for (const auto& r : j) reports.push_back(Report::from_json(r));
    const std::string f = format ? format : "text";
    if (f == "csv") {
      *out = duplicate(csv_summary(reports));
    } else if (f == "text") {
      *out = duplicate(text_summary(reports));
    } else {
      throw InvalidArgument("unknown summary format '" + f + "'");
    }
  });
}

}  // extern "C"
