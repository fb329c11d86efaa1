#include "ogrpos/ogrpos.h"

#include <cstring>
#include <new>
#include <random>
#include <string>

#include "cells.hpp"
#include "lgv.hpp"
#include "pfaffians.hpp"
#include "positivity.hpp"
#include "so2n.hpp"

struct ogr_skew {
    ogr::SkewMatrix a;
};

struct ogr_minors {
    ogr::MinorTable table;
};

struct ogr_nonneg {
    ogr::NonnegReport report;
};

struct ogr_pfaffs {
    std::vector<ogr::PfaffianEntry> entries;
};

struct ogr_strings {
    std::vector<std::string> items;
};

namespace {

thread_local std::string last_error;

ogr_status to_status(ogr::Errc c) {
    switch (c) {
        case ogr::Errc::argument: return OGR_ERR_ARGUMENT;
        case ogr::Errc::dimension: return OGR_ERR_DIMENSION;
        case ogr::Errc::not_skew: return OGR_ERR_NOT_SKEW;
        case ogr::Errc::domain: return OGR_ERR_DOMAIN;
        case ogr::Errc::not_in_chart: return OGR_ERR_NOT_IN_CHART;
        case ogr::Errc::limit: return OGR_ERR_LIMIT;
        case ogr::Errc::not_recognized: return OGR_ERR_NOT_RECOGNIZED;
        case ogr::Errc::internal: return OGR_ERR_INTERNAL;
    }
    return OGR_ERR_INTERNAL;
}

template <class F>
ogr_status guarded(F&& f) {
    try {
        f();
        last_error.clear();
        return OGR_OK;
    } catch (const ogr::Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return OGR_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return OGR_ERR_INTERNAL;
    }
}

ogr_status null_arg() {
    last_error = "null argument";
    return OGR_ERR_NULL;
}

char* dup(const std::string& s) {
    char* p = new char[s.size() + 1];
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

std::vector<ogr::Rational> parse_list(const char* const* t, std::size_t count) {
    std::vector<ogr::Rational> out;
    for (std::size_t i = 0; i < count; ++i) {
        if (!t[i]) ogr::fail(ogr::Errc::argument, "null parameter string");
        out.push_back(ogr::parse_rational(t[i]));
    }
    return out;
}

ogr_skew* wrap(const ogr::ChartPoint& p) {
    return new ogr_skew{ogr::chart(p)};
}

}  // namespace

extern "C" {

OGRPOS_API const char* ogr_version(void) { return "1.0.0"; }

OGRPOS_API const char* ogr_status_string(ogr_status s) {
    switch (s) {
        case OGR_OK: return "ok";
        case OGR_ERR_ARGUMENT: return "invalid argument";
        case OGR_ERR_DIMENSION: return "dimension mismatch";
        case OGR_ERR_NOT_SKEW: return "matrix is not skew-symmetric";
        case OGR_ERR_DOMAIN: return "outside the domain of the operation";
        case OGR_ERR_NOT_IN_CHART: return "point is not in the chart";
        case OGR_ERR_LIMIT: return "size limit exceeded";
        case OGR_ERR_NOT_RECOGNIZED: return "not recognized as a nonnegative point";
        case OGR_ERR_INTERNAL: return "internal invariant violation";
        case OGR_ERR_NULL: return "null argument";
    }
    return "unknown status";
}

OGRPOS_API const char* ogr_last_error(void) { return last_error.c_str(); }

OGRPOS_API void ogr_string_free(char* s) { delete[] s; }

OGRPOS_API ogr_status ogr_skew_create(int n, const char* const* entries, ogr_skew** out) {
    if (!out || (!entries && n > 0)) return null_arg();
    return guarded([&] {
        if (n < 1) ogr::fail(ogr::Errc::dimension, "matrix size must be positive");
        const auto nn = static_cast<std::size_t>(n);
        ogr::QMatrix m(nn, nn);
        for (std::size_t i = 0; i < nn; ++i)
            for (std::size_t j = 0; j < nn; ++j) {
                const char* e = entries[i * nn + j];
                if (!e) ogr::fail(ogr::Errc::argument, "null matrix entry");
                m(i, j) = ogr::parse_rational(e);
            }
        *out = new ogr_skew{ogr::SkewMatrix(std::move(m))};
    });
}

OGRPOS_API void ogr_skew_free(ogr_skew* a) { delete a; }

OGRPOS_API int ogr_skew_n(const ogr_skew* a) { return a ? a->a.n() : 0; }

OGRPOS_API ogr_status ogr_skew_entry(const ogr_skew* a, int i, int j, char** out) {
    if (!a || !out) return null_arg();
    return guarded([&] {
        if (i < 1 || j < 1 || i > a->a.n() || j > a->a.n()) ogr::fail(ogr::Errc::argument, "index out of range");
        *out = dup(ogr::to_string(a->a(i, j)));
    });
}

OGRPOS_API ogr_status ogr_check_positive(const ogr_skew* a, int* positive, ogr_minors** table) {
    if (!a || !positive) return null_arg();
    return guarded([&] {
        auto r = ogr::is_totally_positive(a->a);
        *positive = r.positive ? 1 : 0;
        if (table) *table = new ogr_minors{std::move(r.table)};
    });
}

OGRPOS_API size_t ogr_minors_count(const ogr_minors* m) { return m ? m->table.entries.size() : 0; }

OGRPOS_API ogr_status ogr_minors_get(const ogr_minors* m, size_t idx, int* j, int* k, char** value) {
    if (!m) return null_arg();
    return guarded([&] {
        if (idx >= m->table.entries.size()) ogr::fail(ogr::Errc::argument, "index out of range");
        const auto& e = m->table.entries[idx];
        if (j) *j = e.j;
        if (k) *k = e.k;
        if (value) *value = dup(ogr::to_string(e.value));
    });
}

OGRPOS_API void ogr_minors_free(ogr_minors* m) { delete m; }

OGRPOS_API ogr_status ogr_check_nonnegative(const ogr_skew* a, ogr_nonneg** out) {
    if (!a || !out) return null_arg();
    return guarded([&] { *out = new ogr_nonneg{ogr::is_totally_nonnegative(a->a)}; });
}

OGRPOS_API ogr_verdict ogr_nonneg_verdict(const ogr_nonneg* r) {
    if (!r) return OGR_VERDICT_NOT_NONNEGATIVE;
    switch (r->report.verdict) {
        case ogr::Verdict::positive: return OGR_VERDICT_POSITIVE;
        case ogr::Verdict::nonnegative_boundary: return OGR_VERDICT_NONNEGATIVE_BOUNDARY;
        case ogr::Verdict::not_nonnegative: break;
    }
    return OGR_VERDICT_NOT_NONNEGATIVE;
}

OGRPOS_API size_t ogr_nonneg_count(const ogr_nonneg* r) { return r ? r->report.leading.size() : 0; }

OGRPOS_API ogr_status ogr_nonneg_get(const ogr_nonneg* r, size_t idx, int* j, int* k, int* vanishes, int* degree,
                                     char** coeff) {
    if (!r) return null_arg();
    return guarded([&] {
        if (idx >= r->report.leading.size()) ogr::fail(ogr::Errc::argument, "index out of range");
        const auto& l = r->report.leading[idx];
        if (j) *j = l.j;
        if (k) *k = l.k;
        if (vanishes) *vanishes = l.term ? 0 : 1;
        if (l.term) {
            if (degree) *degree = l.term->degree;
            if (coeff) *coeff = dup(ogr::to_string(l.term->coeff));
        }
    });
}

OGRPOS_API int ogr_nonneg_witness(const ogr_nonneg* r, int* j, int* k) {
    if (!r || !r->report.witness) return 0;
    if (j) *j = r->report.witness->first;
    if (k) *k = r->report.witness->second;
    return 1;
}

OGRPOS_API void ogr_nonneg_free(ogr_nonneg* r) { delete r; }

OGRPOS_API ogr_status ogr_pfaffians(const ogr_skew* a, ogr_pfaffs** out) {
    if (!a || !out) return null_arg();
    return guarded([&] { *out = new ogr_pfaffs{ogr::pfaffian_vector(a->a)}; });
}

OGRPOS_API size_t ogr_pfaffs_count(const ogr_pfaffs* p) { return p ? p->entries.size() : 0; }

OGRPOS_API ogr_status ogr_pfaffs_get(const ogr_pfaffs* p, size_t idx, int* buf, size_t cap, size_t* size, int* sign,
                                     char** pf, char** spinor) {
    if (!p) return null_arg();
    return guarded([&] {
        if (idx >= p->entries.size()) ogr::fail(ogr::Errc::argument, "index out of range");
        const auto& e = p->entries[idx];
        if (size) *size = e.subset.size();
        if (buf) {
            if (cap < e.subset.size()) ogr::fail(ogr::Errc::dimension, "subset buffer too small");
            std::copy(e.subset.begin(), e.subset.end(), buf);
        }
        if (sign) *sign = e.sign;
        if (pf) *pf = dup(ogr::to_string(e.pf));
        if (spinor) *spinor = dup(ogr::to_string(e.spinor));
    });
}

OGRPOS_API ogr_status ogr_sign_pattern(const ogr_skew* a, int strict, int* ok, int* buf, size_t cap, size_t* size) {
    if (!a || !ok) return null_arg();
    return guarded([&] {
        const auto r = ogr::check_sign_pattern(a->a, strict != 0);
        *ok = r.ok ? 1 : 0;
        const std::size_t len = r.witness ? r.witness->size() : 0;
        if (size) *size = len;
        if (buf && r.witness) {
            if (cap < len) ogr::fail(ogr::Errc::dimension, "subset buffer too small");
            std::copy(r.witness->begin(), r.witness->end(), buf);
        }
    });
}

OGRPOS_API void ogr_pfaffs_free(ogr_pfaffs* p) { delete p; }

OGRPOS_API ogr_status ogr_recover_params(const ogr_skew* a, ogr_strings** out) {
    if (!a || !out) return null_arg();
    return guarded([&] {
        auto s = new ogr_strings;
        for (const auto& t : ogr::recover_params(a->a)) s->items.push_back(ogr::to_string(t));
        *out = s;
    });
}

OGRPOS_API ogr_status ogr_random_params(size_t count, uint64_t seed, ogr_strings** out) {
    if (!out) return null_arg();
    return guarded([&] {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<unsigned long> pick(1, 1ul << 16);
        auto s = new ogr_strings;
        for (std::size_t i = 0; i < count; ++i) {
            const unsigned long p = pick(rng);
            const unsigned long q = pick(rng);
            ogr::Rational r(p, q);
            r.canonicalize();
            s->items.push_back(ogr::to_string(r));
        }
        *out = s;
    });
}

OGRPOS_API ogr_status ogr_sample(int n, const char* const* t, size_t count, ogr_skew** out) {
    if (!out || (!t && count)) return null_arg();
    return guarded([&] {
        const auto params = parse_list(t, count);
        for (const auto& x : params)
            if (x <= 0) ogr::fail(ogr::Errc::domain, "parameters must be positive");
        *out = wrap(ogr::marsh_rietsch(n, params));
    });
}

OGRPOS_API ogr_status ogr_cell_param_count(const char* label, int* count) {
    if (!label || !count) return null_arg();
    return guarded([&] { *count = ogr::cell_dimension(ogr::parse_label(label)); });
}

OGRPOS_API ogr_status ogr_sample_cell(const char* label, const char* const* t, size_t count, ogr_skew** out) {
    if (!label || !out || (!t && count)) return null_arg();
    return guarded([&] {
        const auto c = ogr::parse_label(label);
        *out = wrap(ogr::sample_cell(c, parse_list(t, count)));
    });
}

OGRPOS_API ogr_status ogr_identify_cell(const ogr_skew* a, int allow_large, char** label) {
    if (!a || !label) return null_arg();
    return guarded([&] {
        const auto c = ogr::identify_cell(ogr::from_skew(a->a), allow_large != 0);
        *label = dup(ogr::label_string(c));
    });
}

OGRPOS_API ogr_status ogr_cells_in_chart(int n, int allow_large, ogr_strings** out) {
    if (!out) return null_arg();
    return guarded([&] {
        auto s = new ogr_strings;
        for (const auto& c : ogr::cells_in_chart(n, allow_large != 0)) s->items.push_back(ogr::label_string(c));
        *out = s;
    });
}

OGRPOS_API ogr_status ogr_lgv_export(int n, const char* label, char** dot) {
    if (!dot) return null_arg();
    return guarded([&] {
        if (!label) {
            *dot = dup(ogr::export_dot(ogr::build_top(n)));
            return;
        }
        const auto c = ogr::parse_label(label);
        if (c.w.n() != n) ogr::fail(ogr::Errc::dimension, "cell label does not match n");
        *dot = dup(ogr::export_dot(ogr::build_boundary(c.v, c.w)));
    });
}

OGRPOS_API size_t ogr_strings_count(const ogr_strings* s) { return s ? s->items.size() : 0; }

OGRPOS_API const char* ogr_strings_get(const ogr_strings* s, size_t idx) {
    if (!s || idx >= s->items.size()) return nullptr;
    return s->items[idx].c_str();
}

OGRPOS_API void ogr_strings_free(ogr_strings* s) { delete s; }

}  // extern "C"
