#include "epiwit.h"

#include <cstdlib>
#include <cstring>
#include <random>
#include <string>

#include "witness.hpp"
#include "witness_json.hpp"

using namespace epiwit;

struct epw_cert {
  Certificate c;
};

struct epw_report {
  Report r;
};

namespace {

thread_local std::string g_last_error;

epw_status set_error(epw_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

long long default_max_field_bits() {
  if (const char* env = std::getenv("EPIWIT_MAX_FIELD_BITS")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 64;
}

template <class Fn>
epw_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const SchemaError& e) {
    return set_error(EPW_ESCHEMA, e.what());
  } catch (const CoverageError& e) {
    return set_error(EPW_REDIRECT, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(EPW_EINVAL, e.what());
  } catch (const std::exception& e) {
    return set_error(EPW_EINTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* epw_last_error(void) { return g_last_error.c_str(); }

epw_status epw_build(char type, int rank, long long p, long long a, epw_cert** out) {
  if (!out) return set_error(EPW_EINVAL, "null output pointer");
  *out = nullptr;
  return guarded([&]() -> epw_status {
    auto cov = coverage_for(type, rank, p);
    if (!cov.covered) {
      bool scope = cov.redirect.rfind("out of scope", 0) == 0;
      return set_error(scope ? EPW_OUT_OF_SCOPE : EPW_REDIRECT, cov.redirect);
    }
    *out = new epw_cert{build_certificate(type, rank, p, a)};
    return EPW_OK;
  });
}

epw_status epw_cert_to_json(const epw_cert* cert, char** out_json) {
  if (!cert || !out_json) return set_error(EPW_EINVAL, "null argument");
  return guarded([&]() -> epw_status {
    *out_json = dup_string(canonical_dump(cert_to_json(cert->c)));
    return *out_json ? EPW_OK : set_error(EPW_EINTERNAL, "allocation failed");
  });
}

epw_status epw_cert_from_json(const char* json_text, epw_cert** out) {
  if (!json_text || !out) return set_error(EPW_EINVAL, "null argument");
  *out = nullptr;
  return guarded([&]() -> epw_status {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded()) return set_error(EPW_ESCHEMA, "not valid JSON");
    *out = new epw_cert{cert_from_json(j)};
    return EPW_OK;
  });
}

epw_status epw_cert_set_seed(epw_cert* cert, long long seed) {
  if (!cert) return set_error(EPW_EINVAL, "null argument");
  cert->c.seed = seed;
  return EPW_OK;
}

epw_status epw_verify(const epw_cert* cert, const char* level, long long max_field_bits,
                      epw_report** out) {
  if (!cert || !level || !out) return set_error(EPW_EINVAL, "null argument");
  *out = nullptr;
  return guarded([&]() -> epw_status {
    long long bits = max_field_bits > 0 ? max_field_bits : default_max_field_bits();
    auto rep = verify_certificate(cert->c, level, bits);
    *out = new epw_report{std::move(rep)};
    return (*out)->r.pass ? EPW_OK : set_error(EPW_EVERIFY, "verification failed");
  });
}

int epw_report_pass(const epw_report* rep) {
  if (!rep) return -1;
  return rep->r.pass ? 1 : 0;
}

int epw_report_check_count(const epw_report* rep) {
  if (!rep) return -1;
  return (int)rep->r.checks.size();
}

epw_status epw_report_check(const epw_report* rep, int index, const char** name,
                            const char** status, const char** detail) {
  if (!rep || index < 0 || index >= (int)rep->r.checks.size())
    return set_error(EPW_EINVAL, "bad report index");
  const auto& c = rep->r.checks[index];
  if (name) *name = c.name.c_str();
  if (status) *status = c.status.c_str();
  if (detail) *detail = c.detail.c_str();
  return EPW_OK;
}

epw_status epw_report_to_json(const epw_report* rep, char** out_json) {
  if (!rep || !out_json) return set_error(EPW_EINVAL, "null argument");
  return guarded([&]() -> epw_status {
    *out_json = dup_string(canonical_dump(report_to_json(rep->r)));
    return *out_json ? EPW_OK : set_error(EPW_EINTERNAL, "allocation failed");
  });
}

epw_status epw_mutate(const epw_cert* cert, unsigned long long seed, epw_cert** out) {
  if (!cert || !out) return set_error(EPW_EINVAL, "null argument");
  *out = nullptr;
  return guarded([&]() -> epw_status {
    std::mt19937_64 rng(seed);
    *out = new epw_cert{mutate_certificate(cert->c, rng)};
    (*out)->c.seed = (long long)seed;
    return EPW_OK;
  });
}

epw_status epw_char_suite_json(char** out_json) {
  if (!out_json) return set_error(EPW_EINVAL, "null argument");
  return guarded([&]() -> epw_status {
    json arr = json::array();
    for (const auto& c : character_suite())
      arr.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    *out_json = dup_string(canonical_dump(arr));
    return *out_json ? EPW_OK : set_error(EPW_EINTERNAL, "allocation failed");
  });
}

epw_status epw_grid_json(int max_rank, char** out_json) {
  if (!out_json) return set_error(EPW_EINVAL, "null argument");
  return guarded([&]() -> epw_status {
    json arr = json::array();
    for (const auto& g : default_grid(max_rank))
      arr.push_back({{"type", std::string(1, g.type)}, {"rank", g.rank}, {"p", g.p}});
    *out_json = dup_string(canonical_dump(arr));
    return *out_json ? EPW_OK : set_error(EPW_EINTERNAL, "allocation failed");
  });
}

void epw_cert_free(epw_cert* cert) { delete cert; }
void epw_report_free(epw_report* rep) { delete rep; }
void epw_free_string(char* s) { std::free(s); }

}  // extern "C"
