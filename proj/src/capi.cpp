#include "simcore.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "enumerate.hpp"
#include "partition.hpp"
#include "serialize.hpp"
#include "shi.hpp"
#include "verify.hpp"

struct simcore_partition {
    simcore::Partition value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
simcore_status guard(Fn&& fn) {
    try {
        fn();
        return SIMCORE_OK;
    } catch (const simcore::limit_error& e) {
        g_last_error = e.what();
        return SIMCORE_ERR_LIMIT;
    } catch (const simcore::invariant_error& e) {
        g_last_error = e.what();
        return SIMCORE_ERR_INTERNAL;
    } catch (const std::overflow_error& e) {
        g_last_error = e.what();
        return SIMCORE_ERR_OVERFLOW;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return SIMCORE_ERR_DOMAIN;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SIMCORE_ERR_BADARG;
    }
}

simcore::Family parse_family(char family) {
    if (family == 'A' || family == 'a') return simcore::Family::TypeA;
    if (family == 'C' || family == 'c') return simcore::Family::TypeC;
    throw std::invalid_argument("family must be A or C");
}

const simcore::Partition& deref(const simcore_partition* p) {
    if (!p) throw std::invalid_argument("null partition handle");
    return p->value;
}

}  // namespace

extern "C" {

const char* simcore_last_error(void) { return g_last_error.c_str(); }

void simcore_string_free(char* s) { std::free(s); }

simcore_status simcore_partition_parse(const char* comma_separated, simcore_partition** out) {
    return guard([&] {
        if (!comma_separated || !out) throw std::invalid_argument("null argument");
        *out = new simcore_partition{simcore::partition_from_csv(comma_separated)};
    });
}

simcore_status simcore_partition_from_parts(const int64_t* parts, int len,
                                            simcore_partition** out) {
    return guard([&] {
        if ((!parts && len > 0) || len < 0 || !out) throw std::invalid_argument("bad argument");
        std::vector<simcore::i64> v(parts, parts + len);
        *out = new simcore_partition{simcore::Partition(std::move(v))};
    });
}

void simcore_partition_free(simcore_partition* p) { delete p; }

simcore_status simcore_partition_json(const simcore_partition* p, char** out) {
    return guard([&] {
        if (!out) throw std::invalid_argument("null output");
        *out = dup_string(simcore::partition_to_json(deref(p)));
    });
}

int64_t simcore_partition_size(const simcore_partition* p) { return p ? p->value.size() : 0; }

int simcore_partition_length(const simcore_partition* p) { return p ? p->value.length() : 0; }

simcore_status simcore_partition_conjugate(const simcore_partition* p, simcore_partition** out) {
    return guard([&] {
        if (!out) throw std::invalid_argument("null output");
        *out = new simcore_partition{simcore::conjugate(deref(p))};
    });
}

simcore_status simcore_partition_is_core(const simcore_partition* p, int64_t a, int* out) {
    return guard([&] {
        if (!out) throw std::invalid_argument("null output");
        *out = simcore::is_core(deref(p), a) ? 1 : 0;
    });
}

simcore_status simcore_partition_core_reduce(const simcore_partition* p, int64_t a,
                                             simcore_partition** out) {
    return guard([&] {
        if (!out) throw std::invalid_argument("null output");
        *out = new simcore_partition{simcore::a_core_of(deref(p), a)};
    });
}

simcore_status simcore_partition_stats_json(const simcore_partition* p, int64_t a, int64_t b,
                                            char** out) {
    return guard([&] {
        if (!out) throw std::invalid_argument("null output");
        *out = dup_string(simcore::stats_record_json(deref(p), a, b));
    });
}

simcore_status simcore_cores_count(int64_t a, int64_t b, int self_conjugate,
                                   int64_t* formula_count, int64_t* enumerated_count) {
    return guard([&] {
        if (!formula_count || !enumerated_count) throw std::invalid_argument("null output");
        simcore::CoreFamily f(a, b, self_conjugate != 0);
        *formula_count = simcore::count_cores_formula(f);
        *enumerated_count = simcore::count_cores(f);
    });
}

simcore_status simcore_cores_list(int64_t a, int64_t b, int self_conjugate, int with_stats,
                                  const char* format, char** out) {
    return guard([&] {
        if (!format || !out) throw std::invalid_argument("null argument");
        if (a >= b)
            throw std::invalid_argument("core families are listed with a < b; swap the arguments");
        simcore::CoreFamily f(a, b, self_conjugate != 0);
        *out = dup_string(simcore::family_listing(f, with_stats != 0, format));
    });
}

simcore_status simcore_qcatalan_json(int64_t a, int64_t b, char** out) {
    return guard([&] {
        if (!out) throw std::invalid_argument("null output");
        *out = dup_string(simcore::poly_to_json(simcore::rational_q_catalan(a, b)));
    });
}

simcore_status simcore_qcatalan_eval(int64_t a, int64_t b, int64_t q0, int64_t* out) {
    return guard([&] {
        if (!out) throw std::invalid_argument("null output");
        *out = simcore::rational_q_catalan(a, b).evaluate(q0);
    });
}

simcore_status simcore_shi_alcoves(char family, int rank, int m, const char* which,
                                   const char* format, char** out) {
    return guard([&] {
        if (!which || !format || !out) throw std::invalid_argument("null argument");
        simcore::ShiConfig cfg(parse_family(family), rank, m);
        *out = dup_string(simcore::alcove_listing(cfg, which, format));
    });
}

simcore_status simcore_shi_coords(char family, int rank, const char* window_csv, char** out) {
    return guard([&] {
        if (!window_csv || !out) throw std::invalid_argument("null argument");
        simcore::ShiConfig cfg(parse_family(family), rank, 1);
        simcore::AffineWindow w{simcore::parse_int_list(window_csv)};
        *out = dup_string(simcore::shi_coords_json(w, cfg));
    });
}

simcore_status simcore_verify(const char* claim, int max_ab, int max_n, int max_m, int* all_ok,
                              char** out) {
    return guard([&] {
        if (!claim || !all_ok || !out) throw std::invalid_argument("null argument");
        std::vector<simcore::Report> reports =
            simcore::run_verification(claim, max_ab, max_n, max_m);
        *all_ok = 1;
        for (const simcore::Report& r : reports)
            if (!r.ok()) *all_ok = 0;
        *out = dup_string(simcore::reports_to_json(reports));
    });
}

}  // extern "C"
