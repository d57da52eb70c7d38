// greenpoly: Weyl group tables, Green polynomials and their verification.
#include "greenpoly/io.hpp"
#include "greenpoly/lusztig_shoji.hpp"
#include "greenpoly/spin.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace greenpoly;

namespace {

constexpr int EXIT_DATA = 1;
constexpr int EXIT_VERIFY = 2;

struct Config {
    std::string family = "A";
    int rank = 2;
    std::string format = "pretty";
    bool json_flag = false;
    std::string data_dir;
    std::string table_file;
    double tolerance = 1e-8;
    std::string orbit, phi;
    std::string form = "qell";
    std::string file;

    Format fmt() const { return json_flag ? Format::Json : parse_format(format); }
    WeylType type() const {
        WeylType t = make_type(family, rank);
        check_supported(t);
        return t;
    }
};

// Collected output of one command.
struct Output {
    json doc = json::object();
    std::vector<LabeledMatrix> tables;
    std::vector<std::string> lines;  // pretty mode only
    std::string raw;                 // printed as is in every format

    void print(Format f) const {
        if (!raw.empty()) {
            std::cout << raw;
            return;
        }
        if (f == Format::Json) {
            std::cout << doc.dump(2) << '\n';
            return;
        }
        for (size_t i = 0; i < tables.size(); ++i) {
            if (i) std::cout << '\n';
            std::cout << (f == Format::Csv ? tables[i].csv() : tables[i].pretty());
        }
        if (f == Format::Pretty) {
            if (!tables.empty() && !lines.empty()) std::cout << '\n';
            for (const auto& l : lines) std::cout << l << '\n';
        }
    }
};

std::string num(double x) {
    if (std::abs(x) < 1e-9) x = 0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

json cjson(cplx v) { return json::array({num(v.real()), num(v.imag())}); }

std::string cstr(cplx v) {
    if (std::abs(v.imag()) < 1e-9) return num(v.real());
    if (std::abs(v.real()) < 1e-9) return num(v.imag()) + "i";
    return num(v.real()) + (v.imag() < 0 ? "" : "+") + num(v.imag()) + "i";
}

std::string pair_label(const SpringerTable& t, int p) {
    return "(" + partition_label(t.orbits[t.pairs[p].orbit].partition) + "," + t.local_system_label(p) + ")";
}

std::vector<std::string> class_labels(const WeylGroupData& g) {
    std::vector<std::string> r;
    for (const auto& c : g.classes()) r.push_back(c.label);
    return r;
}

SpringerTable table_for(const Config& cfg, const WeylType& t) {
    if (!cfg.table_file.empty()) return load_table(cfg.table_file);
    return builtin_table(t, cfg.data_dir);
}

GreenTableau tableau_for(const Config& cfg) {
    WeylType t = cfg.type();
    return solve(table_for(cfg, t), WeylGroupData::build(t));
}

int pair_from_flags(const Config& cfg, const GreenTableau& tab) {
    if (cfg.orbit.empty()) throw std::invalid_argument("--orbit is required");
    int p = tab.table.find_pair(parse_partition(cfg.orbit), cfg.phi);
    if (p < 0)
        throw std::invalid_argument("no Springer pair for orbit " + cfg.orbit +
                                    (cfg.phi.empty() ? "" : " and local system " + cfg.phi));
    return p;
}

std::vector<int> selected_pairs(const Config& cfg, const GreenTableau& tab) {
    if (!cfg.orbit.empty()) return {pair_from_flags(cfg, tab)};
    std::vector<int> r(tab.num_pairs());
    for (int i = 0; i < tab.num_pairs(); ++i) r[i] = i;
    return r;
}

// ------------------------------------------------------------------ wg

Output cmd_wg_classes(const Config& cfg) {
    auto g = WeylGroupData::build(cfg.type());
    Output out;
    LabeledMatrix m{"class", class_labels(*g), {"size", "sign", "det(1-qw)", "det(1+w)"}, {}};
    json cls = json::array();
    for (int c = 0; c < g->num_classes(); ++c) {
        const auto& k = g->conj_class(c);
        IntPoly cp = g->refl_charpoly(c);
        m.cells.push_back({IntPoly(k.size), IntPoly(g->sign_of_class(c)), cp, IntPoly(1) * cp.eval(-1)});
        cls.push_back({{"label", k.label}, {"size", k.size}, {"sign", g->sign_of_class(c)},
                       {"charpoly", to_json(cp)}, {"word", k.word}});
    }
    out.doc = {{"type", g->type().name()}, {"order", g->order()}, {"degrees", g->degrees()}, {"classes", cls}};
    out.tables.push_back(m);
    out.lines.push_back("|W| = " + std::to_string(g->order()));
    return out;
}

Output cmd_wg_chartable(const Config& cfg) {
    auto g = WeylGroupData::build(cfg.type());
    Output out;
    LabeledMatrix m{"irrep", g->irrep_labels(), class_labels(*g), {}};
    for (int i = 0; i < g->num_irreps(); ++i) {
        std::vector<IntPoly> row;
        for (int c = 0; c < g->num_classes(); ++c) row.emplace_back(g->char_value(i, c));
        m.cells.push_back(row);
    }
    out.doc = {{"type", g->type().name()}, {"classes", class_labels(*g)}, {"irreps", g->irrep_labels()},
               {"table", g->char_table()}};
    out.tables.push_back(m);
    return out;
}

// ------------------------------------------------------------- pairing

Output cmd_pairing(const Config& cfg) {
    auto g = WeylGroupData::build(cfg.type());
    Output out;
    LabeledMatrix m{"irrep", g->irrep_labels(), g->irrep_labels(), {}};
    if (cfg.form == "qell") {
        m.cells = gram_qelliptic(*g);
    } else if (cfg.form == "minusone" || cfg.form == "delta") {
        auto gm = cfg.form == "minusone" ? gram_minus_one(*g) : gram_delta(*g);
        for (const auto& r : gm) {
            std::vector<IntPoly> row;
            for (const auto& x : r) row.push_back(IntPoly(1) * x);
            m.cells.push_back(row);
        }
        std::vector<std::vector<mpq_class>> q;
        for (const auto& r : gm) q.emplace_back(r.begin(), r.end());
        int rk = rational_rank(q);
        out.doc["rank"] = rk;
        out.lines.push_back("rank = " + std::to_string(rk));
    } else {
        throw std::invalid_argument("unknown --form '" + cfg.form + "' (qell|minusone|delta)");
    }
    m.name = cfg.form;
    out.doc["type"] = g->type().name();
    out.doc["form"] = cfg.form;
    out.doc["gram"] = m.to_json();
    out.tables.push_back(m);
    return out;
}

Output cmd_fakedeg(const Config& cfg) {
    auto g = WeylGroupData::build(cfg.type());
    Output out;
    LabeledMatrix m{"irrep", g->irrep_labels(), {"fake degree"}, {}};
    json fd = json::object();
    for (int i = 0; i < g->num_irreps(); ++i) {
        IntPoly f = fake_degree(*g, i);
        m.cells.push_back({f});
        fd[g->irrep_labels()[i]] = to_json(f);
    }
    bool ok = chevalley_check(*g);
    out.doc = {{"type", g->type().name()}, {"fake_degrees", fd}, {identity::CHEVALLEY, ok}};
    out.tables.push_back(m);
    out.lines.push_back(std::string(identity::CHEVALLEY) + ": " + (ok ? "ok" : "FAILED"));
    return out;
}

// ------------------------------------------------------------ springer

Output springer_summary(const SpringerTable& t) {
    Output out;
    out.doc = json::parse(export_table(t));
    LabeledMatrix m{"pair", {}, {"d_e", "|A(e)|"}, {}};
    for (int p = 0; p < t.num_pairs(); ++p) {
        const auto& o = t.orbits[t.pairs[p].orbit];
        m.rows.push_back(pair_label(t, p) + " -> " + t.pairs[p].irrep);
        m.cells.push_back({IntPoly(o.d_e), IntPoly(o.comp.order())});
    }
    out.tables.push_back(m);
    return out;
}

Output cmd_springer_show(const Config& cfg) {
    WeylType t = cfg.type();
    auto tab = table_for(cfg, t);
    tab.validate(*WeylGroupData::build(tab.type));
    return springer_summary(tab);
}

Output cmd_springer_load(const Config& cfg) {
    auto tab = load_table(cfg.file);
    tab.validate(*WeylGroupData::build(tab.type));
    Output out = springer_summary(tab);
    out.lines.push_back(cfg.file + ": valid table for " + tab.type.name());
    return out;
}

// --------------------------------------------------------------- green

LabeledMatrix pair_matrix(const GreenTableau& tab, const std::string& name, const IntPolyMatrix& m) {
    std::vector<std::string> labels;
    for (int p = 0; p < tab.num_pairs(); ++p) labels.push_back(pair_label(tab.table, p));
    return {name, labels, labels, m};
}

std::vector<std::vector<int>> orbit_blocks(const GreenTableau& tab) {
    std::vector<std::vector<int>> b;
    for (size_t o = 0; o < tab.table.orbits.size(); ++o) b.push_back(tab.table.pairs_of(int(o)));
    return b;
}

Output cmd_green(const Config& cfg) {
    auto tab = tableau_for(cfg);
    const auto& g = *tab.group;
    Output out;
    std::vector<std::string> pairs, irreps;
    for (int p = 0; p < tab.num_pairs(); ++p) {
        pairs.push_back(pair_label(tab.table, p));
        irreps.push_back(tab.table.pairs[p].irrep);
    }
    out.doc["type"] = g.type().name();
    out.doc["p"] = to_json(tab.p);
    out.doc["pairs"] = pairs;
    out.doc["irreps"] = irreps;
    out.doc["note"] = "Lambda is p M^{-1} blockwise; no isogeny-dependent reversal applied";

    if (!cfg.orbit.empty()) {
        int p = pair_from_flags(cfg, tab);
        LabeledMatrix col{"X_q" + pairs[p], g.irrep_labels(), {"coefficient"}, {}};
        json x = json::object();
        for (int i = 0; i < g.num_irreps(); ++i) {
            col.cells.push_back({tab.X[p].coords[i]});
            if (!tab.X[p].coords[i].is_zero()) x[g.irrep_labels()[i]] = to_json(tab.X[p].coords[i]);
        }
        out.doc["pair"] = pairs[p];
        out.doc["X"] = x;
        out.tables.push_back(col);
        return out;
    }

    LabeledMatrix k{"K", irreps, pairs, tab.K};
    out.doc["K"] = k.to_json();
    out.doc["M"] = pair_matrix(tab, "M", tab.M).to_json();
    out.doc["Lambda"] = pair_matrix(tab, "Lambda", tab.Lambda).to_json();
    out.doc["Omega"] = pair_matrix(tab, "Omega", tab.Omega).to_json();
    out.tables.push_back(k);
    if (cfg.fmt() == Format::Csv) out.tables.push_back(pair_matrix(tab, "M", tab.M));
    for (int p = 0; p < tab.num_pairs(); ++p) {
        std::string s = "X_q" + pairs[p] + " =";
        bool first = true;
        for (int i = 0; i < g.num_irreps(); ++i) {
            if (tab.X[p].coords[i].is_zero()) continue;
            s += std::string(first ? " " : " + ") + "[" + tab.X[p].coords[i].to_string() + "]" + g.irrep_labels()[i];
            first = false;
        }
        out.lines.push_back(s);
    }
    out.lines.push_back("M(q) = " + diag_layout(tab.M, orbit_blocks(tab)));
    return out;
}

// -------------------------------------------------------------- verify

struct Report {
    std::vector<CheckResult> checks;
    json extra = json::object();

    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
    void add(const std::string& id, bool ok, const std::string& where = "") { checks.push_back({id, ok, where}); }
};

long expected_elliptic(const WeylType& t) {
    auto count = [](int n, auto pred) {
        long k = 0;
        for (const auto& p : partitions_of(n)) k += pred(p);
        return k;
    };
    switch (t.family) {
        case Family::A:
            return count(t.rank + 1, [](const Partition& p) {
                for (int x : p)
                    if (x % 2 == 0) return 0;
                return 1;
            });
        case Family::B:
        case Family::C: return static_cast<long>(partitions_of(t.rank).size());
        case Family::D:
            if (t.rank % 2) return -1;
            return count(t.rank, [](const Partition& p) { return p.size() % 2 == 0 ? 1 : 0; });
        case Family::G2: return 3;
    }
    return -1;
}

void verify_elliptic(const WeylType& t, Report& r) {
    auto g = WeylGroupData::build(t);
    int count = g->delta_elliptic_count();
    int rk = minus_one_gram_rank(*g);
    std::vector<std::vector<mpq_class>> q;
    for (const auto& row : gram_delta(*g)) q.emplace_back(row.begin(), row.end());
    int rk_delta = rational_rank(q);
    long expect = expected_elliptic(t);
    r.extra["delta_elliptic_classes"] = count;
    r.extra["minus_one_gram_rank"] = rk;
    r.extra["delta_gram_rank"] = rk_delta;
    if (expect >= 0) r.extra["expected"] = expect;
    std::string where = "count " + std::to_string(count) + ", ranks " + std::to_string(rk) + "/" +
                        std::to_string(rk_delta) + (expect >= 0 ? ", expected " + std::to_string(expect) : "");
    bool ok = count == rk && count == rk_delta && (expect < 0 || count == expect);
    r.add("elliptic-count-equals-gram-rank", ok, ok ? "" : where);
}

void verify_spin_invariants(const Config& cfg, const WeylType& t, const GreenTableau* tab, Report& r) {
    auto g = tab ? tab->group : WeylGroupData::build(t);
    auto pin = build_pin(g, 1.0);  // residuals are judged below against the tolerance
    double tol = cfg.tolerance;
    auto res = [&](const char* id, double v, double lim) {
        r.extra[id] = num(v);
        r.add(id, v <= lim, v <= lim ? "" : "residual " + num(v));
    };
    res("clifford-relations", clifford_residual(pin), std::min(tol, 1e-12));
    res("braid-relations", braid_residual(pin), std::min(tol, 1e-10));
    res("pin-lift-covers-w", lift_residual(pin), tol);
    res("spin-squared", spin_squared_residual(pin), tol);
    if (!tab) return;
    json norms = json::array();
    for (int p = 0; p < tab->num_pairs(); ++p) {
        auto s = sigma_tilde(*tab, pin, p);
        std::string lbl = pair_label(tab->table, p);
        norms.push_back({{"pair", lbl}, {"exact_norm", s.exact_norm.get_str()}, {"numeric_norm", num(s.numeric_norm())}});
        if (std::abs(s.numeric_norm() - s.exact_norm.get_d()) > tol * std::max(1.0, s.exact_norm.get_d()))
            r.add("sigma-norm-exact-vs-numeric", false, lbl);
        bool nsol = nsol_predicate({tab->table.orbits[tab->orbit_of(p)].partition, t});
        if ((s.exact_norm != 0) != nsol) r.add("sigma-nonzero-iff-nsol", false, lbl);
        if (nsol) {
            auto cf = char_formula_check(*tab, pin, p, tol);
            if (!cf.ok) r.add("character-formula", false, lbl + " " + cf.location);
        }
    }
    r.extra["sigma_norms"] = norms;
    for (const char* id : {"sigma-norm-exact-vs-numeric", "sigma-nonzero-iff-nsol", "character-formula"}) {
        bool seen = false;
        for (const auto& c : r.checks) seen |= c.identity == id;
        if (!seen) r.add(id, true);
    }
}

Output cmd_verify(const Config& cfg, const std::string& what) {
    WeylType t = cfg.type();
    Report r;
    bool needs_tab = what != "elliptic" && !(what == "spin" && !(t.family == Family::A || t.family == Family::C));
    std::unique_ptr<GreenTableau> tab;
    if (needs_tab || what == "all") {
        try {
            tab = std::make_unique<GreenTableau>(tableau_for(cfg));
        } catch (const std::invalid_argument&) {
            if (what != "all") throw;  // no table for this type; 'all' falls back to group checks
        }
    }

    if (tab && (what == "ls" || what == "orth" || what == "all")) {
        for (auto& c : verify_identities(*tab))
            if (what != "orth" || c.identity == identity::ORTHO) r.checks.push_back(c);
    }
    if (tab && (what == "isometry" || what == "all")) {
        for (size_t o = 0; o < tab->table.orbits.size(); ++o)
            if (tab->table.orbits[o].has_m) r.checks.push_back(isometry_check(*tab, int(o)));
    }
    if (tab && (what == "caction" || what == "all") && t.delta_trivial()) {
        r.checks.push_back(caction_check(*tab));
        json signs = json::object();
        auto eps = caction_signs(*tab);
        for (int p = 0; p < tab->num_pairs(); ++p) signs[pair_label(tab->table, p)] = eps[p];
        r.extra["twist_signs"] = signs;
    }
    if (what == "caction" && !t.delta_trivial())
        throw std::invalid_argument("the twist identity needs w0 central; " + t.name() + " has delta != 1");
    if (what == "elliptic" || what == "all") verify_elliptic(t, r);
    if (what == "spin" || what == "all") verify_spin_invariants(cfg, t, tab.get(), r);

    Output out;
    json checks = json::array();
    for (const auto& c : r.checks) {
        json j = {{"identity", c.identity}, {"ok", c.ok}};
        if (!c.ok) j["location"] = c.location;
        checks.push_back(j);
        out.lines.push_back((c.ok ? "ok    " : "FAIL  ") + c.identity + (c.ok ? "" : "  at " + c.location));
    }
    out.doc = {{"type", t.name()}, {"suite", what}, {"ok", r.ok()}, {"checks", checks}, {"details", r.extra}};
    LabeledMatrix m{"identity", {}, {"ok"}, {}};
    for (const auto& c : r.checks) {
        m.rows.push_back(c.identity);
        m.cells.push_back({IntPoly(c.ok ? 1 : 0)});
    }
    if (cfg.fmt() == Format::Csv) out.tables.push_back(m);
    return out;
}

// ---------------------------------------------------------------- spin

Output cmd_spin_sigma(const Config& cfg) {
    auto tab = tableau_for(cfg);
    const auto& g = *tab.group;
    auto pin = build_pin(tab.group);
    Output out;
    out.doc = {{"type", g.type().name()}, {"a_V", pin.a_V()}, {"spin_dim", pin.spin_dim()}};
    json arr = json::array();
    for (int p : selected_pairs(cfg, tab)) {
        auto s = sigma_tilde(tab, pin, p);
        json vals = json::object();
        std::string line = "Sigma" + pair_label(tab.table, p) + ": norm " + s.exact_norm.get_str() + ", values";
        for (int c = 0; c < g.num_classes(); ++c) {
            vals[g.conj_class(c).label] = cjson(s.values[c]);
            line += " " + g.conj_class(c).label + ":" + cstr(s.values[c]);
        }
        arr.push_back({{"pair", pair_label(tab.table, p)},
                       {"exact_norm", s.exact_norm.get_str()},
                       {"numeric_norm", num(s.numeric_norm())},
                       {"values", vals}});
        out.lines.push_back(line);
    }
    out.doc["sigma"] = arr;
    return out;
}

Output cmd_spin_classify(const Config& cfg) {
    auto tab = tableau_for(cfg);
    const auto& g = *tab.group;
    auto pin = build_pin(tab.group);
    Output out;
    json arr = json::array();
    if (g.type().family == Family::A) {
        LabeledMatrix m{"lambda", {}, {"a_lambda", "norm", "b_lambda", "g_lambda", "dim"}, {}};
        mpz_class total = 0;
        for (int p : selected_pairs(cfg, tab)) {
            auto rep = classify_constituents(tab, pin, p);
            if (!rep.distinct) continue;
            total += rep.b_lambda;
            std::string lbl = partition_label(rep.lambda);
            m.rows.push_back(lbl);
            m.cells.push_back({IntPoly(1) * rep.a_lambda, IntPoly(1) * rep.norm, IntPoly(rep.b_lambda),
                               IntPoly(1) * rep.g_lambda, IntPoly(1) * rep.constituent_dim});
            arr.push_back({{"lambda", lbl},
                           {"parity", rep.even ? "even" : "odd"},
                           {"a_lambda", rep.a_lambda.get_str()},
                           {"norm", rep.norm.get_str()},
                           {"pattern", rep.single ? "single self-dual" : "dual pair"},
                           {"b_lambda", rep.b_lambda},
                           {"g_lambda", rep.g_lambda.get_str()},
                           {"constituent_dim", rep.constituent_dim.get_str()}});
        }
        out.tables.push_back(m);
        out.doc["genuine_count"] = total.get_str();
        out.lines.push_back("genuine irreducibles reached: " + total.get_str());
    } else {
        LabeledMatrix m{"pair", {}, {"norm", "dim"}, {}};
        for (int p : selected_pairs(cfg, tab)) {
            auto s = sigma_tilde(tab, pin, p);
            if (s.exact_norm == 0) continue;
            mpz_class dim((long)std::lround(std::abs(s.values[g.identity_class()])));
            m.rows.push_back(pair_label(tab.table, p));
            m.cells.push_back({IntPoly(1) * s.exact_norm, IntPoly(1) * dim});
            arr.push_back({{"pair", pair_label(tab.table, p)}, {"norm", s.exact_norm.get_str()}, {"dim", dim.get_str()}});
        }
        out.tables.push_back(m);
    }
    out.doc["type"] = g.type().name();
    out.doc["constituents"] = arr;
    return out;
}

Output cmd_spin_index(const Config& cfg) {
    auto tab = tableau_for(cfg);
    const auto& g = *tab.group;
    auto pin = build_pin(tab.group);
    Output out;
    json arr = json::array();
    for (int p : selected_pairs(cfg, tab)) {
        auto d = dirac_index_char(tab, pin, p);
        json even = json::object(), coset = json::object();
        bool ez = true, cz = true;
        for (int c = 0; c < g.num_classes(); ++c) {
            even[g.conj_class(c).label] = cjson(d.even_part[c]);
            coset[g.conj_class(c).label] = cjson(d.coset_part[c]);
            ez &= std::abs(d.even_part[c]) <= cfg.tolerance;
            cz &= std::abs(d.coset_part[c]) <= cfg.tolerance;
        }
        std::string lbl = pair_label(tab.table, p);
        arr.push_back({{"pair", lbl}, {"even_part", even}, {"coset_part", coset},
                       {"even_zero", ez}, {"coset_zero", cz}});
        out.lines.push_back("index" + lbl + ": even part " + (ez ? "zero" : "nonzero") + ", coset part " +
                            (cz ? "zero" : "nonzero") + " (coset values up to a scalar)");
    }
    out.doc = {{"type", g.type().name()}, {"index", arr}};
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weyl group tables, Green polynomials and spin characters"};
    app.fallthrough();
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--type", cfg.family, "Weyl type: A, B, C, D or G2");
    app.add_option("--rank", cfg.rank, "rank");
    app.add_option("--format", cfg.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_flag("--json", cfg.json_flag, "shorthand for --format json");
    app.add_option("--data-dir", cfg.data_dir, "directory holding springer/*.json")->envname("GREENPOLY_DATA_DIR");
    app.add_option("--table", cfg.table_file, "Springer table file to use instead of the built-in one");
    app.add_option("--tolerance", cfg.tolerance, "numeric tolerance for spin checks")
        ->check(CLI::Range(0.0, 1e-4) & CLI::Validator([](std::string& s) {
                    return std::stod(s) > 0 ? std::string() : std::string("tolerance must be positive");
                }, "POSITIVE"));
    app.add_option("--orbit", cfg.orbit, "orbit partition, e.g. 2,2 or 22");
    app.add_option("--phi", cfg.phi, "local system label (triv, sgn, +-, ...)");

    std::function<Output()> action;
    auto verb = [&](CLI::App* parent, const std::string& name, const std::string& help, auto fn) {
        auto* s = parent->add_subcommand(name, help);
        s->callback([&action, fn, &cfg] { action = [fn, &cfg] { return fn(cfg); }; });
        return s;
    };

    auto* wg = app.add_subcommand("wg", "Weyl group data")->require_subcommand(1);
    verb(wg, "classes", "conjugacy classes", cmd_wg_classes);
    verb(wg, "chartable", "character table", cmd_wg_chartable);

    auto* pairing = app.add_subcommand("pairing", "pairings on the character ring")->require_subcommand(1);
    verb(pairing, "gram", "Gram matrix on irreducibles", cmd_pairing)
        ->add_option("--form", cfg.form, "qell, minusone or delta")
        ->check(CLI::IsMember({"qell", "minusone", "delta"}));

    verb(&app, "fakedeg", "fake degrees", cmd_fakedeg);

    auto* spr = app.add_subcommand("springer", "Springer correspondence tables")->require_subcommand(1);
    verb(spr, "show", "show the table for --type/--rank", cmd_springer_show);
    verb(spr, "load", "validate a table file", cmd_springer_load)->add_option("file", cfg.file)->required();
    auto* exp = spr->add_subcommand("export", "print the table as JSON");
    exp->callback([&] {
        action = [&cfg] {
            Output o;
            o.raw = export_table(table_for(cfg, cfg.type()));
            if (o.raw.back() != '\n') o.raw += '\n';
            return o;
        };
    });

    verb(&app, "green", "solve for the Green polynomials", cmd_green);

    auto* ver = app.add_subcommand("verify", "run identity checks")->require_subcommand(1);
    for (const char* s : {"ls", "all", "isometry", "caction", "elliptic", "spin", "orth"}) {
        std::string name = s;
        ver->add_subcommand(name, "verify " + name)->callback([&action, &cfg, name] {
            action = [&cfg, name] { return cmd_verify(cfg, name); };
        });
    }

    auto* sp = app.add_subcommand("spin", "spin characters")->require_subcommand(1);
    verb(sp, "sigma", "the characters X_{-1} (x) S", cmd_spin_sigma);
    verb(sp, "classify", "constituent classification", cmd_spin_classify);
    verb(sp, "index", "extended Dirac index", cmd_spin_index);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return EXIT_DATA;
    }

    Format fmt;
    try {
        fmt = cfg.fmt();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_DATA;
    }
    try {
        Output out = action();
        out.print(fmt);
        if (out.doc.contains("ok") && out.doc["ok"].is_boolean() && !out.doc["ok"].get<bool>()) return EXIT_VERIFY;
        return 0;
    } catch (const TableError& e) {
        if (fmt == Format::Json) std::cout << json{{"error", e.what()}, {"location", e.where()}}.dump(2) << '\n';
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_DATA;
    } catch (const SolverError& e) {
        // a table that does not solve is a verification failure, not a usage error
        if (fmt == Format::Json)
            std::cout << json{{"ok", false}, {"checks", json::array({{{"identity", identity::LS}, {"ok", false}, {"location", e.what()}}})}}.dump(2)
                      << '\n';
        std::cerr << "verification failed: " << e.what() << '\n';
        return EXIT_VERIFY;
    } catch (const std::exception& e) {
        if (fmt == Format::Json) std::cout << json{{"error", e.what()}}.dump(2) << '\n';
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_DATA;
    }
}
