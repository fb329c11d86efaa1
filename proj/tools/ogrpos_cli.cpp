#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "ogrpos/ogrpos.h"

using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, no = 1, input = 2, internal = 3 };

struct Failure {
    int code;
    std::string message;
};

int exit_for(ogr_status s) {
    switch (s) {
        case OGR_OK: return ok;
        case OGR_ERR_NOT_RECOGNIZED: return no;
        case OGR_ERR_INTERNAL: return internal;
        default: return input;
    }
}

void check(ogr_status s) {
    if (s == OGR_OK) return;
    std::string msg = ogr_last_error();
    if (msg.empty()) msg = ogr_status_string(s);
    throw Failure{exit_for(s), msg};
}

std::string take(char* s) {
    std::string out(s ? s : "");
    ogr_string_free(s);
    return out;
}

using Skew = std::unique_ptr<ogr_skew, decltype(&ogr_skew_free)>;
using Strings = std::unique_ptr<ogr_strings, decltype(&ogr_strings_free)>;

std::vector<std::string> strings_of(const ogr_strings* s) {
    std::vector<std::string> out;
    for (size_t i = 0; i < ogr_strings_count(s); ++i) out.emplace_back(ogr_strings_get(s, i));
    return out;
}

std::string entry_text(const json& e) {
    if (e.is_string()) return e.get<std::string>();
    if (e.is_number_integer()) return e.dump();
    throw Failure{input, "matrix entries must be rational strings or integers"};
}

Skew read_matrix(const std::string& path) {
    json doc;
    try {
        if (path == "-") {
            doc = json::parse(std::cin);
        } else {
            std::ifstream in(path);
            if (!in) throw Failure{input, "cannot open " + path};
            doc = json::parse(in);
        }
    } catch (const json::parse_error& e) {
        throw Failure{input, std::string("malformed matrix file: ") + e.what()};
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries") || !doc["n"].is_number_integer() ||
        !doc["entries"].is_array())
        throw Failure{input, "matrix file needs integer \"n\" and array \"entries\""};
    const int n = doc["n"].get<int>();
    const auto& rows = doc["entries"];
    if (n < 1 || rows.size() != static_cast<size_t>(n)) throw Failure{input, "entries must have n rows"};
    std::vector<std::string> cells;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != static_cast<size_t>(n)) throw Failure{input, "entries must have n columns"};
        for (const auto& e : row) cells.push_back(entry_text(e));
    }
    std::vector<const char*> ptrs;
    for (const auto& c : cells) ptrs.push_back(c.c_str());
    ogr_skew* a = nullptr;
    check(ogr_skew_create(n, ptrs.data(), &a));
    return Skew(a, ogr_skew_free);
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw Failure{input, "empty entry in parameter list"};
        out.push_back(item.substr(b, e - b + 1));
    }
    if (out.empty()) throw Failure{input, "empty parameter list"};
    return out;
}

json matrix_doc(const ogr_skew* a) {
    const int n = ogr_skew_n(a);
    json rows = json::array();
    for (int i = 1; i <= n; ++i) {
        json row = json::array();
        for (int j = 1; j <= n; ++j) {
            char* s = nullptr;
            check(ogr_skew_entry(a, i, j, &s));
            row.push_back(take(s));
        }
        rows.push_back(std::move(row));
    }
    return json{{"n", n}, {"entries", std::move(rows)}};
}

struct Options {
    std::string matrix;
    std::string t;
    std::string cell;
    std::string format = "text";
    int n = 0;
    bool random = false;
    std::uint64_t seed = 0;
    bool allow_large = false;
    bool structured() const { return format == "structured"; }
};

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_check_positive(const Options& o) {
    const Skew a = read_matrix(o.matrix);
    int positive = 0;
    ogr_minors* m = nullptr;
    check(ogr_check_positive(a.get(), &positive, &m));
    std::unique_ptr<ogr_minors, decltype(&ogr_minors_free)> hold(m, ogr_minors_free);
    json minors = json::array();
    for (size_t i = 0; i < ogr_minors_count(m); ++i) {
        int j = 0, k = 0;
        char* v = nullptr;
        check(ogr_minors_get(m, i, &j, &k, &v));
        minors.push_back(json{{"j", j}, {"k", k}, {"value", take(v)}});
    }
    if (o.structured()) {
        emit(json{{"n", ogr_skew_n(a.get())}, {"positive", positive != 0}, {"minors", minors}});
    } else {
        std::cout << "verdict: " << (positive ? "positive" : "not positive") << "\n";
        for (const auto& e : minors)
            std::cout << "M(" << e["j"].get<int>() << "," << e["k"].get<int>() << ") = "
                      << e["value"].get<std::string>() << "\n";
    }
    return positive ? ok : no;
}

const char* verdict_text(ogr_verdict v) {
    switch (v) {
        case OGR_VERDICT_POSITIVE: return "positive";
        case OGR_VERDICT_NONNEGATIVE_BOUNDARY: return "nonnegative-boundary";
        case OGR_VERDICT_NOT_NONNEGATIVE: break;
    }
    return "not-nonnegative";
}

int cmd_check_nonnegative(const Options& o) {
    const Skew a = read_matrix(o.matrix);
    ogr_nonneg* r = nullptr;
    check(ogr_check_nonnegative(a.get(), &r));
    std::unique_ptr<ogr_nonneg, decltype(&ogr_nonneg_free)> hold(r, ogr_nonneg_free);
    const ogr_verdict v = ogr_nonneg_verdict(r);
    json leading = json::array();
    for (size_t i = 0; i < ogr_nonneg_count(r); ++i) {
        int j = 0, k = 0, vanishes = 0, degree = 0;
        char* c = nullptr;
        check(ogr_nonneg_get(r, i, &j, &k, &vanishes, &degree, &c));
        json e{{"j", j}, {"k", k}};
        if (vanishes) {
            e["vanishes"] = true;
        } else {
            e["degree"] = degree;
            e["coefficient"] = take(c);
        }
        leading.push_back(std::move(e));
    }
    int wj = 0, wk = 0;
    const bool has_witness = ogr_nonneg_witness(r, &wj, &wk) != 0;
    if (o.structured()) {
        json doc{{"n", ogr_skew_n(a.get())}, {"verdict", verdict_text(v)}, {"leading", leading}};
        doc["witness"] = has_witness ? json{{"j", wj}, {"k", wk}} : json(nullptr);
        emit(doc);
    } else {
        std::cout << "verdict: " << verdict_text(v) << "\n";
        for (const auto& e : leading) {
            std::cout << "(" << e["j"].get<int>() << "," << e["k"].get<int>() << ") ";
            if (e.contains("vanishes"))
                std::cout << "vanishes\n";
            else
                std::cout << "degree " << e["degree"].get<int>() << ", coefficient "
                          << e["coefficient"].get<std::string>() << "\n";
        }
        if (has_witness) std::cout << "witness: (" << wj << "," << wk << ")\n";
    }
    return v == OGR_VERDICT_NOT_NONNEGATIVE ? no : ok;
}

int cmd_identify_cell(const Options& o) {
    const Skew a = read_matrix(o.matrix);
    char* label = nullptr;
    const ogr_status s = ogr_identify_cell(a.get(), o.allow_large ? 1 : 0, &label);
    if (s == OGR_ERR_NOT_RECOGNIZED) {
        if (o.structured())
            emit(json{{"recognized", false}, {"cell", nullptr}});
        else
            std::cout << "not recognized\n";
        return no;
    }
    check(s);
    const std::string text = take(label);
    int dim = 0;
    check(ogr_cell_param_count(text.c_str(), &dim));
    if (o.structured())
        emit(json{{"recognized", true}, {"cell", text}, {"dimension", dim}});
    else
        std::cout << text << "\n";
    return ok;
}

std::vector<std::string> params_for(const Options& o, size_t count) {
    if (o.random && !o.t.empty()) throw Failure{input, "--t and --random are exclusive"};
    if (!o.random && o.t.empty()) throw Failure{input, "give --t or --random"};
    if (!o.random) return split_csv(o.t);
    ogr_strings* s = nullptr;
    check(ogr_random_params(count, o.seed, &s));
    const Strings hold(s, ogr_strings_free);
    return strings_of(s);
}

int emit_sample(const ogr_skew* a, const std::vector<std::string>& t, const std::string& cell) {
    json doc = matrix_doc(a);
    if (!cell.empty()) doc["cell"] = cell;
    doc["t"] = t;
    emit(doc);
    return ok;
}

std::vector<const char*> pointers(const std::vector<std::string>& v) {
    std::vector<const char*> p;
    for (const auto& s : v) p.push_back(s.c_str());
    return p;
}

int cmd_sample(const Options& o) {
    if (o.n < 2) throw Failure{input, "--n must be at least 2"};
    const auto t = params_for(o, static_cast<size_t>(o.n) * static_cast<size_t>(o.n - 1) / 2);
    const auto p = pointers(t);
    ogr_skew* a = nullptr;
    check(ogr_sample(o.n, p.data(), p.size(), &a));
    const Skew hold(a, ogr_skew_free);
    return emit_sample(a, t, "");
}

int cmd_sample_cell(const Options& o) {
    int count = 0;
    check(ogr_cell_param_count(o.cell.c_str(), &count));
    const auto t = count == 0 && !o.random && o.t.empty() ? std::vector<std::string>{}
                                                          : params_for(o, static_cast<size_t>(count));
    const auto p = pointers(t);
    ogr_skew* a = nullptr;
    check(ogr_sample_cell(o.cell.c_str(), p.data(), p.size(), &a));
    const Skew hold(a, ogr_skew_free);
    return emit_sample(a, t, o.cell);
}

int cmd_pfaffians(const Options& o) {
    const Skew a = read_matrix(o.matrix);
    const int n = ogr_skew_n(a.get());
    ogr_pfaffs* p = nullptr;
    check(ogr_pfaffians(a.get(), &p));
    std::unique_ptr<ogr_pfaffs, decltype(&ogr_pfaffs_free)> hold(p, ogr_pfaffs_free);
    json rows = json::array();
    std::vector<int> buf(static_cast<size_t>(n));
    for (size_t i = 0; i < ogr_pfaffs_count(p); ++i) {
        size_t size = 0;
        int sign = 0;
        char *pf = nullptr, *spinor = nullptr;
        check(ogr_pfaffs_get(p, i, buf.data(), buf.size(), &size, &sign, &pf, &spinor));
        rows.push_back(json{{"subset", std::vector<int>(buf.begin(), buf.begin() + static_cast<long>(size))},
                            {"pf", take(pf)},
                            {"sign", sign},
                            {"spinor", take(spinor)}});
    }
    int good = 0;
    size_t wsize = 0;
    check(ogr_sign_pattern(a.get(), 0, &good, buf.data(), buf.size(), &wsize));
    const std::vector<int> witness(buf.begin(), buf.begin() + static_cast<long>(wsize));
    if (o.structured()) {
        json doc{{"n", n}, {"sign_pattern", good != 0}};
        doc["witness"] = good ? json(nullptr) : json(witness);
        doc["pfaffians"] = rows;
        emit(doc);
    } else {
        std::cout << "sign pattern: " << (good ? "holds" : "violated") << "\n";
        if (!good) {
            std::cout << "witness: {";
            for (size_t i = 0; i < witness.size(); ++i) std::cout << (i ? "," : "") << witness[i];
            std::cout << "}\n";
        }
        for (const auto& r : rows) {
            std::cout << "Pf{";
            const auto s = r["subset"].get<std::vector<int>>();
            for (size_t i = 0; i < s.size(); ++i) std::cout << (i ? "," : "") << s[i];
            std::cout << "} = " << r["pf"].get<std::string>() << "  sign " << r["sign"].get<int>() << "  spinor "
                      << r["spinor"].get<std::string>() << "\n";
        }
    }
    return good ? ok : no;
}

int cmd_recover_params(const Options& o) {
    const Skew a = read_matrix(o.matrix);
    ogr_strings* s = nullptr;
    check(ogr_recover_params(a.get(), &s));
    const Strings hold(s, ogr_strings_free);
    const auto t = strings_of(s);
    if (o.structured()) {
        emit(json{{"n", ogr_skew_n(a.get())}, {"t", t}});
    } else {
        for (size_t i = 0; i < t.size(); ++i) std::cout << (i ? "," : "") << t[i];
        std::cout << "\n";
    }
    return ok;
}

int cmd_lgv_export(const Options& o) {
    char* dot = nullptr;
    check(ogr_lgv_export(o.n, o.cell.empty() ? nullptr : o.cell.c_str(), &dot));
    std::cout << take(dot);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Total positivity tests for skew-symmetric matrices"};
    app.require_subcommand(1);
    Options o;
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "structured"}));
    };
    auto add_matrix = [&](CLI::App* c) {
        c->add_option("--matrix", o.matrix, "Matrix file, or - for stdin")->required();
        add_format(c);
    };
    auto add_params = [&](CLI::App* c) {
        c->add_option("--t", o.t, "Comma-separated positive rationals");
        c->add_flag("--random", o.random, "Draw random parameters");
        c->add_option("--seed", o.seed, "Seed for --random");
        add_format(c);
    };

    auto* pos = app.add_subcommand("check-positive", "Decide total positivity");
    add_matrix(pos);
    auto* nonneg = app.add_subcommand("check-nonnegative", "Decide total nonnegativity");
    add_matrix(nonneg);
    auto* ident = app.add_subcommand("identify-cell", "Name the cell of a nonnegative point");
    add_matrix(ident);
    ident->add_flag("--allow-large", o.allow_large, "Lift the size guard");
    auto* sample = app.add_subcommand("sample", "Totally positive point from parameters");
    sample->add_option("--n", o.n, "Size")->required();
    add_params(sample);
    auto* sample_cell = app.add_subcommand("sample-cell", "Point of a given cell");
    sample_cell->add_option("--cell", o.cell, "Cell label v;w")->required();
    add_params(sample_cell);
    auto* pf = app.add_subcommand("pfaffians", "All principal Pfaffians and the sign pattern");
    add_matrix(pf);
    auto* rec = app.add_subcommand("recover-params", "Parameters of a totally positive point");
    add_matrix(rec);
    auto* lgv = app.add_subcommand("lgv-export", "Path diagram as DOT");
    lgv->add_option("--n", o.n, "Size")->required();
    lgv->add_option("--cell", o.cell, "Cell label v;w");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return input;
    }

    try {
        if (*pos) return cmd_check_positive(o);
        if (*nonneg) return cmd_check_nonnegative(o);
        if (*ident) return cmd_identify_cell(o);
        if (*sample) return cmd_sample(o);
        if (*sample_cell) return cmd_sample_cell(o);
        if (*pf) return cmd_pfaffians(o);
        if (*rec) return cmd_recover_params(o);
        if (*lgv) return cmd_lgv_export(o);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return internal;
    }
    return internal;
}
