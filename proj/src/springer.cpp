#include "greenpoly/springer.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#ifndef GREENPOLY_DEFAULT_DATA_DIR
#define GREENPOLY_DEFAULT_DATA_DIR "data"
#endif

namespace greenpoly {

using nlohmann::json;

// ------------------------------------------------------------ combinatorics

int orbit_size_n(const WeylType& t) {
    switch (t.family) {
        case Family::A: return t.rank + 1;
        case Family::B: return 2 * t.rank + 1;
        case Family::C:
        case Family::D: return 2 * t.rank;
        case Family::G2: return 7;
    }
    return 0;
}

namespace {

std::map<int, int> multiplicities(const Partition& p) {
    std::map<int, int> r;
    for (int x : p) r[x]++;
    return r;
}

bool is_partition(const Partition& p) {
    return std::all_of(p.begin(), p.end(), [](int x) { return x > 0; }) &&
           std::is_sorted(p.rbegin(), p.rend());
}

int sum_of(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

}  // namespace

bool valid_orbit(const OrbitLabel& o) {
    if (!is_partition(o.partition) || o.partition.empty()) return false;
    if (sum_of(o.partition) != orbit_size_n(o.ambient)) return false;
    if (o.ambient.family == Family::C)
        for (auto [part, r] : multiplicities(o.partition))
            if (part % 2 && r % 2) return false;
    return true;
}

bool nsol_predicate(const OrbitLabel& o) {
    auto mult = multiplicities(o.partition);
    switch (o.ambient.family) {
        case Family::A:
            return std::all_of(mult.begin(), mult.end(), [](auto kv) { return kv.second == 1; });
        case Family::C:
            return std::all_of(mult.begin(), mult.end(),
                               [](auto kv) { return kv.first % 2 == 0 && kv.second <= 2; });
        default:
            throw std::invalid_argument("nsol_predicate: only types A and C are encoded");
    }
}

int d_e_formula(const OrbitLabel& o) {
    Partition t = transpose(o.partition);
    switch (o.ambient.family) {
        case Family::A: {
            int s = 0;
            for (int x : t) s += x * (x - 1) / 2;
            return s;
        }
        case Family::C: {
            int sq = 0, odd = 0;
            for (int x : t) sq += x * x;
            for (int x : o.partition) odd += x % 2;
            int dimz = (sq + odd) / 2;
            return (dimz - o.ambient.rank) / 2;
        }
        default:
            throw std::invalid_argument("d_e_formula: only types A and C are encoded");
    }
}

// ------------------------------------------------------------ component groups

ComponentGroup ComponentGroup::trivial() {
    ComponentGroup g;
    g.springer_type = {0};
    return g;
}

ComponentGroup ComponentGroup::elementary(int k) {
    ComponentGroup g;
    g.kind = k ? Kind::ElementaryAbelian : Kind::Trivial;
    g.k = k;
    for (int i = 0; i < (1 << k); ++i) g.springer_type.push_back(i);
    return g;
}

int ComponentGroup::order() const {
    switch (kind) {
        case Kind::Trivial: return 1;
        case Kind::ElementaryAbelian: return 1 << k;
        case Kind::S3: return 6;
    }
    return 1;
}

int ComponentGroup::num_chars() const { return kind == Kind::S3 ? 3 : order(); }

std::vector<std::vector<long>> ComponentGroup::char_table() const {
    if (kind == Kind::S3) return {{1, 1, 1}, {2, 0, -1}, {1, -1, 1}};
    int n = order();
    std::vector<std::vector<long>> t(n, std::vector<long>(n));
    for (int phi = 0; phi < n; ++phi)
        for (int x = 0; x < n; ++x) t[phi][x] = __builtin_popcount(phi & x) % 2 ? -1 : 1;
    return t;
}

std::vector<long> ComponentGroup::class_sizes() const {
    if (kind == Kind::S3) return {1, 3, 2};
    return std::vector<long>(order(), 1);
}

std::string ComponentGroup::kind_name() const {
    switch (kind) {
        case Kind::Trivial: return "trivial";
        case Kind::ElementaryAbelian: return "elementary_abelian";
        case Kind::S3: return "S3";
    }
    return "?";
}

ComponentGroup component_group_typeC(const Partition& p) {
    // one Z/2 generator per distinct even part, largest part first; the
    // centre -1 of Sp maps to the product of generators with odd multiplicity
    std::vector<std::pair<int, int>> even;
    for (auto [part, r] : multiplicities(p))
        if (part % 2 == 0) even.emplace_back(part, r);
    std::sort(even.rbegin(), even.rend());
    ComponentGroup g = ComponentGroup::elementary(static_cast<int>(even.size()));
    int z = 0;
    for (size_t i = 0; i < even.size(); ++i)
        if (even[i].second % 2) z |= 1 << i;
    g.springer_type.clear();
    for (int phi = 0; phi < g.order(); ++phi)
        if (__builtin_popcount(phi & z) % 2 == 0) g.springer_type.push_back(phi);
    return g;
}

namespace {

void add_block(MRep& m, int d, const std::vector<long>& chi) {
    for (auto& b : m.md_blocks)
        if (b.d == d) {
            b.dim += static_cast<int>(chi[0]);
            for (size_t x = 0; x < chi.size(); ++x) b.chi[x] += chi[x];
            return;
        }
    m.md_blocks.push_back({d, static_cast<int>(chi[0]), chi});
    std::sort(m.md_blocks.begin(), m.md_blocks.end(),
              [](const MBlock& a, const MBlock& b) { return a.d < b.d; });
}

}  // namespace

MRep m_rep_typeA(const Partition& p) {
    // reductive centralizer (prod GL_{r_i}) / G_m: central torus of rank
    // (#distinct parts - 1), semisimple part prod SL_{r_i}
    auto mult = multiplicities(p);
    MRep m;
    m.vz_dim = static_cast<int>(mult.size()) - 1;
    m.vz_char = {m.vz_dim};
    for (auto [part, r] : mult)
        for (int d = 2; d <= r; ++d) add_block(m, d, {1});
    return m;
}

MRep m_rep_typeC(const Partition& p, const ComponentGroup& a) {
    // H_e = prod_{i odd} Sp_{r_i} x prod_{i even} O_{r_i}
    int n = a.order();
    std::vector<int> even_parts;
    for (auto [part, r] : multiplicities(p))
        if (part % 2 == 0) even_parts.push_back(part);
    std::sort(even_parts.rbegin(), even_parts.rend());
    auto gen_of = [&](int part) {
        return static_cast<int>(std::find(even_parts.begin(), even_parts.end(), part) -
                                even_parts.begin());
    };
    std::vector<long> triv(n, 1);
    auto sign_of = [&](int gen) {
        std::vector<long> s(n);
        for (int x = 0; x < n; ++x) s[x] = (x >> gen) & 1 ? -1 : 1;
        return s;
    };
    MRep m;
    m.vz_char.assign(n, 0);
    for (auto [part, r] : multiplicities(p)) {
        if (part % 2) {
            for (int d = 2; d <= r; d += 2) add_block(m, d, triv);
            continue;
        }
        int gen = gen_of(part);
        if (r == 2) {
            // SO_2 is the torus; the non-identity component inverts it
            m.vz_dim += 1;
            auto s = sign_of(gen);
            for (int x = 0; x < n; ++x) m.vz_char[x] += s[x];
        } else if (r % 2) {
            for (int d = 2; d <= r - 1; d += 2) add_block(m, d, triv);
        } else if (r >= 4) {
            for (int d = 2; d <= r - 2; d += 2) add_block(m, d, triv);
            add_block(m, r / 2, sign_of(gen));  // Pfaffian
        }
    }
    if (n == 1 && m.vz_char.empty()) m.vz_char = {0};
    return m;
}

namespace {

// det(1 - q^d x) on a module where x has eigenvalues +-1 only
IntPoly involution_det(int d, int dim, long chi) {
    int plus = static_cast<int>((dim + chi) / 2), minus = static_cast<int>((dim - chi) / 2);
    return IntPoly::one_minus(d, 1).pow(plus) * IntPoly::one_minus(d, -1).pow(minus);
}

}  // namespace

IntPoly tr_M(const SpringerOrbit& o, int x) {
    if (!o.has_m) throw std::invalid_argument("tr_M: no M-representation for this orbit");
    if (o.comp.kind == ComponentGroup::Kind::S3)
        throw std::invalid_argument("tr_M: S3 component groups are reference data only");
    IntPoly r = involution_det(1, o.m.vz_dim, o.m.vz_char.at(x));
    for (const auto& b : o.m.md_blocks) r *= involution_det(b.d, b.dim, b.chi.at(x));
    return r;
}

IntPoly q_M_pairing(const SpringerOrbit& o, int phi, int phi2) {
    auto t = o.comp.char_table();
    IntPoly s;
    for (int x = 0; x < o.comp.order(); ++x)
        s.add_scaled(tr_M(o, x), mpz_class(t.at(phi).at(x) * t.at(phi2).at(x)));
    return s.divexact(mpz_class(o.comp.order()));
}

bool quasidistinguished_predicate(const SpringerOrbit& o) {
    for (int a : o.comp.springer_type)
        for (int b : o.comp.springer_type)
            if (q_M_pairing(o, a, b).eval(1) != 0) return true;
    return false;
}

// ------------------------------------------------------------ tables

std::vector<int> SpringerTable::pairs_of(int orbit) const {
    std::vector<int> r;
    for (int i = 0; i < num_pairs(); ++i)
        if (pairs[i].orbit == orbit) r.push_back(i);
    return r;
}

int SpringerTable::find_orbit(const Partition& p) const {
    for (size_t i = 0; i < orbits.size(); ++i)
        if (orbits[i].partition == p) return static_cast<int>(i);
    return -1;
}

namespace {

std::string ls_label(const ComponentGroup& g, int phi) {
    if (g.kind == ComponentGroup::Kind::S3) {
        static const char* names[3] = {"triv", "refl", "sgn"};
        return names[phi];
    }
    if (g.k <= 1) return phi ? "sgn" : "triv";
    std::string s;
    for (int i = 0; i < g.k; ++i) s += (phi >> i) & 1 ? '-' : '+';
    return s;
}

std::vector<std::vector<bool>> dominance_closure(const std::vector<SpringerOrbit>& orbits) {
    size_t n = orbits.size();
    std::vector<std::vector<bool>> geq(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) geq[i][j] = dominates(orbits[i].partition, orbits[j].partition);
    return geq;
}

}  // namespace

std::string SpringerTable::local_system_label(int pair) const {
    const auto& p = pairs.at(pair);
    return ls_label(orbits.at(p.orbit).comp, p.local_system);
}

int SpringerTable::find_pair(const Partition& p, const std::string& local_system) const {
    int o = find_orbit(p);
    if (o < 0) return -1;
    for (int i : pairs_of(o)) {
        if (local_system.empty() && pairs_of(o).size() == 1) return i;
        if (local_system_label(i) == local_system || std::to_string(pairs[i].local_system) == local_system)
            return i;
    }
    return -1;
}

void SpringerTable::validate(const WeylGroupData& g) {
    if (!(g.type() == type) &&
        !(g.type().rank == type.rank && (g.type().family == Family::B || g.type().family == Family::C) &&
          (type.family == Family::B || type.family == Family::C)))
        throw TableError("type", "table is for " + type.name() + ", group is " + g.type().name());
    if (orbits.empty()) throw TableError("orbits", "no orbits");
    bool encoded = type.family == Family::A || type.family == Family::C;
    for (size_t i = 0; i < orbits.size(); ++i) {
        std::string at = "orbits[" + std::to_string(i) + "]";
        const auto& o = orbits[i];
        OrbitLabel lab{o.partition, type};
        if (encoded && !valid_orbit(lab))
            throw TableError(at + ".partition", "'" + partition_label(o.partition) +
                                                    "' is not a nilpotent orbit of " + type.name());
        if (!encoded && !is_partition(o.partition))
            throw TableError(at + ".partition", "not a partition");
        if (encoded && o.d_e != d_e_formula(lab))
            throw TableError(at + ".d_e", "expected " + std::to_string(d_e_formula(lab)) +
                                              ", got " + std::to_string(o.d_e));
        for (size_t j = 0; j < i; ++j)
            if (orbits[j].partition == o.partition) throw TableError(at, "duplicate orbit");
        if (pairs_of(static_cast<int>(i)).empty()) throw TableError(at + ".pairs", "orbit has no pairs");
    }
    std::vector<int> seen(g.num_irreps(), -1);
    std::vector<int> count_in_orbit(orbits.size(), 0);
    for (int k = 0; k < num_pairs(); ++k) {
        auto& p = pairs[k];
        if (p.orbit < 0 || p.orbit >= static_cast<int>(orbits.size()))
            throw TableError("pairs[" + std::to_string(k) + "]", "orbit index out of range");
        std::string at = "orbits[" + std::to_string(p.orbit) + "].pairs[" +
                         std::to_string(count_in_orbit[p.orbit]++) + "]";
        const auto& comp = orbits[p.orbit].comp;
        if (p.local_system < 0 || p.local_system >= comp.num_chars())
            throw TableError(at + ".local_system", "not a character of A(e)");
        if (std::find(comp.springer_type.begin(), comp.springer_type.end(), p.local_system) ==
            comp.springer_type.end())
            throw TableError(at + ".local_system", "character is not of Springer type");
        for (int k2 = 0; k2 < k; ++k2)
            if (pairs[k2].orbit == p.orbit && pairs[k2].local_system == p.local_system)
                throw TableError(at + ".local_system", "duplicate local system");
        p.irrep_index = g.irrep_index(p.irrep);
        if (p.irrep_index < 0) throw TableError(at + ".irrep", "unknown irrep '" + p.irrep + "'");
        if (seen[p.irrep_index] >= 0)
            throw TableError(at + ".irrep", "irrep '" + p.irrep + "' assigned twice");
        seen[p.irrep_index] = k;
        if (k > 0 && pairs[k - 1].orbit > p.orbit)
            throw TableError(at, "pairs are not grouped by orbit");
    }
    for (int i = 0; i < g.num_irreps(); ++i)
        if (seen[i] < 0)
            throw TableError("pairs", "missing pair for irrep '" + g.irrep_labels()[i] + "'");
    size_t n = orbits.size();
    if (geq.size() != n) throw TableError("closure", "relation has wrong size");
    for (size_t i = 0; i < n; ++i) geq[i][i] = true;
    // transitive closure, then antisymmetry and compatibility with the listing order
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            if (geq[i][k])
                for (size_t j = 0; j < n; ++j)
                    if (geq[k][j]) geq[i][j] = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i != j && geq[i][j] && geq[j][i])
                throw TableError("closure", "cyclic relation between orbits " + std::to_string(i) +
                                                " and " + std::to_string(j));
            if (geq[i][j] && j < i)
                throw TableError("closure", "orbit " + std::to_string(i) + " lies above orbit " +
                                                std::to_string(j) + " but is listed after it");
        }
}

SpringerTable table_typeA(int n) {
    if (n < 2 || n > 9) throw std::invalid_argument("table_typeA: n out of range");
    SpringerTable t;
    t.type = {Family::A, n - 1};
    for (const auto& lam : partitions_of(n)) {
        SpringerOrbit o;
        o.partition = lam;
        o.d_e = d_e_formula({lam, t.type});
        o.comp = ComponentGroup::trivial();
        o.has_m = true;
        o.m = m_rep_typeA(lam);
        t.orbits.push_back(o);
        t.pairs.push_back({static_cast<int>(t.orbits.size()) - 1, 0, partition_label(transpose(lam)), -1});
    }
    t.geq = dominance_closure(t.orbits);
    return t;
}

namespace {

void attach_typeC_data(SpringerTable& t) {
    for (size_t i = 0; i < t.orbits.size(); ++i) {
        auto& o = t.orbits[i];
        ComponentGroup expect = component_group_typeC(o.partition);
        if (o.comp.kind != expect.kind || o.comp.k != expect.k)
            throw TableError("orbits[" + std::to_string(i) + "].comp_group",
                             "expected " + expect.kind_name() + " of rank " + std::to_string(expect.k));
        o.comp = expect;
        o.has_m = true;
        o.m = m_rep_typeC(o.partition, o.comp);
    }
}

}  // namespace

SpringerTable table_typeC(int n, const std::string& dir) {
    if (n < 1 || n > 3) throw std::invalid_argument("table_typeC: rank must be 1, 2 or 3");
    if (n != 2) {
        SpringerTable t = load_table(data_dir(dir) + "/springer/C" + std::to_string(n) + ".json");
        if (!(t.type == WeylType{Family::C, n}))
            throw TableError("type", "shipped file does not describe C" + std::to_string(n));
        return t;
    }
    // Sp(4), fixed by the reference example
    SpringerTable t;
    t.type = {Family::C, 2};
    struct Row {
        Partition p;
        std::vector<std::pair<int, std::string>> pairs;
    };
    std::vector<Row> rows = {{{4}, {{0, "0x11"}}},
                             {{2, 2}, {{0, "1x1"}, {1, "11x0"}}},
                             {{2, 1, 1}, {{0, "0x2"}}},
                             {{1, 1, 1, 1}, {{0, "2x0"}}}};
    for (const auto& r : rows) {
        SpringerOrbit o;
        o.partition = r.p;
        o.d_e = d_e_formula({r.p, t.type});
        o.comp = component_group_typeC(r.p);
        t.orbits.push_back(o);
        for (const auto& [ls, irr] : r.pairs)
            t.pairs.push_back({static_cast<int>(t.orbits.size()) - 1, ls, irr, -1});
    }
    attach_typeC_data(t);
    t.geq = dominance_closure(t.orbits);
    return t;
}

SpringerTable builtin_table(const WeylType& t, const std::string& dir) {
    switch (t.family) {
        case Family::A: return table_typeA(t.rank + 1);
        case Family::C: return table_typeC(t.rank, dir);
        default:
            throw std::invalid_argument("no built-in Springer table for type " + t.name() +
                                        "; load one with 'springer load'");
    }
}

std::string data_dir(const std::string& override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("GREENPOLY_DATA_DIR"); env && *env) return env;
    return GREENPOLY_DEFAULT_DATA_DIR;
}

// ------------------------------------------------------------ JSON

namespace {

ComponentGroup parse_comp_group(const json& j, const std::string& at) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw TableError(at, "expected an object with a 'kind' string");
    std::string kind = j["kind"];
    if (kind == "trivial") return ComponentGroup::trivial();
    if (kind == "elementary_abelian") {
        if (!j.contains("rank") || !j["rank"].is_number_integer() || j["rank"].get<int>() < 0 ||
            j["rank"].get<int>() > 8)
            throw TableError(at + ".rank", "expected an integer in 0..8");
        return ComponentGroup::elementary(j["rank"].get<int>());
    }
    if (kind == "S3") {
        ComponentGroup g;
        g.kind = ComponentGroup::Kind::S3;
        g.springer_type = {0, 1, 2};
        return g;
    }
    throw TableError(at + ".kind", "unknown component group kind '" + kind + "'");
}

int parse_local_system(const json& j, const ComponentGroup& g, const std::string& at) {
    if (g.kind == ComponentGroup::Kind::S3) {
        for (int i = 0; i < 3; ++i)
            if (j.is_string() && j.get<std::string>() == ls_label(g, i)) return i;
        throw TableError(at, "expected one of triv, refl, sgn");
    }
    if (!j.is_array() || static_cast<int>(j.size()) != g.k)
        throw TableError(at, "expected a sign vector of length " + std::to_string(g.k));
    int phi = 0;
    for (int i = 0; i < g.k; ++i) {
        if (!j[i].is_number_integer() || (j[i].get<int>() != 1 && j[i].get<int>() != -1))
            throw TableError(at + "[" + std::to_string(i) + "]", "expected +1 or -1");
        if (j[i].get<int>() == -1) phi |= 1 << i;
    }
    return phi;
}

}  // namespace

SpringerTable parse_table(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw TableError(origin, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw TableError(origin, "top level must be an object");
    for (const char* key : {"type", "rank", "orbits", "closure"})
        if (!j.contains(key)) throw TableError(key, "missing field");
    if (!j["type"].is_string()) throw TableError("type", "expected a string");
    if (!j["rank"].is_number_integer()) throw TableError("rank", "expected an integer");
    SpringerTable t;
    try {
        t.type = make_type(j["type"].get<std::string>(), j["rank"].get<int>());
    } catch (const std::invalid_argument& e) {
        throw TableError("type", e.what());
    }
    if (!j["orbits"].is_array()) throw TableError("orbits", "expected an array");
    for (size_t i = 0; i < j["orbits"].size(); ++i) {
        const json& jo = j["orbits"][i];
        std::string at = "orbits[" + std::to_string(i) + "]";
        if (!jo.is_object()) throw TableError(at, "expected an object");
        for (const char* key : {"partition", "d_e", "comp_group", "pairs"})
            if (!jo.contains(key)) throw TableError(at + "." + key, "missing field");
        SpringerOrbit o;
        if (!jo["partition"].is_array()) throw TableError(at + ".partition", "expected an array");
        for (const auto& x : jo["partition"]) {
            if (!x.is_number_integer()) throw TableError(at + ".partition", "expected integers");
            o.partition.push_back(x.get<int>());
        }
        if (!jo["d_e"].is_number_integer()) throw TableError(at + ".d_e", "expected an integer");
        o.d_e = jo["d_e"].get<int>();
        o.comp = parse_comp_group(jo["comp_group"], at + ".comp_group");
        if (!jo["pairs"].is_array()) throw TableError(at + ".pairs", "expected an array");
        t.orbits.push_back(o);
        for (size_t k = 0; k < jo["pairs"].size(); ++k) {
            const json& jp = jo["pairs"][k];
            std::string pat = at + ".pairs[" + std::to_string(k) + "]";
            if (!jp.is_object() || !jp.contains("local_system") || !jp.contains("irrep") ||
                !jp["irrep"].is_string())
                throw TableError(pat, "expected {\"local_system\":..., \"irrep\":\"...\"}");
            SpringerPair p;
            p.orbit = static_cast<int>(i);
            p.local_system = parse_local_system(jp["local_system"], o.comp, pat + ".local_system");
            p.irrep = jp["irrep"].get<std::string>();
            t.pairs.push_back(p);
        }
    }
    size_t n = t.orbits.size();
    t.geq.assign(n, std::vector<bool>(n, false));
    if (!j["closure"].is_array()) throw TableError("closure", "expected an array of [i,j] pairs");
    for (size_t k = 0; k < j["closure"].size(); ++k) {
        const json& e = j["closure"][k];
        std::string at = "closure[" + std::to_string(k) + "]";
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw TableError(at, "expected [i, j]");
        int a = e[0].get<int>(), b = e[1].get<int>();
        if (a < 0 || b < 0 || a >= static_cast<int>(n) || b >= static_cast<int>(n))
            throw TableError(at, "orbit index out of range");
        t.geq[a][b] = true;
    }
    // derived data for the families with encoded combinatorics
    if (t.type.family == Family::C) {
        attach_typeC_data(t);
    } else if (t.type.family == Family::A) {
        for (auto& o : t.orbits) {
            if (o.comp.kind != ComponentGroup::Kind::Trivial)
                throw TableError("comp_group", "type A component groups are trivial");
            o.has_m = true;
            o.m = m_rep_typeA(o.partition);
        }
    } else {
        // Springer type = whatever the file uses
        for (size_t i = 0; i < n; ++i) {
            auto& o = t.orbits[i];
            o.comp.springer_type.clear();
            for (const auto& p : t.pairs)
                if (p.orbit == static_cast<int>(i)) o.comp.springer_type.push_back(p.local_system);
            std::sort(o.comp.springer_type.begin(), o.comp.springer_type.end());
        }
    }
    auto g = WeylGroupData::build(t.type);
    t.validate(*g);
    return t;
}

SpringerTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TableError(path, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_table(ss.str(), path);
}

std::string export_table(const SpringerTable& t) {
    json j;
    j["type"] = t.type.name().substr(0, t.type.family == Family::G2 ? 2 : 1);
    j["rank"] = t.type.rank;
    j["orbits"] = json::array();
    for (size_t i = 0; i < t.orbits.size(); ++i) {
        const auto& o = t.orbits[i];
        json jo;
        jo["partition"] = o.partition;
        jo["d_e"] = o.d_e;
        json cg;
        cg["kind"] = o.comp.kind_name();
        if (o.comp.kind == ComponentGroup::Kind::ElementaryAbelian) cg["rank"] = o.comp.k;
        jo["comp_group"] = cg;
        jo["pairs"] = json::array();
        for (int k : t.pairs_of(static_cast<int>(i))) {
            const auto& p = t.pairs[k];
            json jp;
            if (o.comp.kind == ComponentGroup::Kind::S3) {
                jp["local_system"] = ls_label(o.comp, p.local_system);
            } else {
                json v = json::array();
                for (int b = 0; b < o.comp.k; ++b) v.push_back((p.local_system >> b) & 1 ? -1 : 1);
                jp["local_system"] = v;
            }
            jp["irrep"] = p.irrep;
            jo["pairs"].push_back(jp);
        }
        j["orbits"].push_back(jo);
    }
    j["closure"] = json::array();
    for (size_t a = 0; a < t.orbits.size(); ++a)
        for (size_t b = 0; b < t.orbits.size(); ++b)
            if (a != b && t.geq[a][b]) j["closure"].push_back({a, b});
    return j.dump(2) + "\n";
}

const std::vector<ExceptionEntry>& exception_table() {
    static const std::vector<ExceptionEntry> table = {
        {"D_n, n even", "(a1,a1,...,ak,ak), distinct odd a_i", "(Z/2)^(k-1)",
         "twice the reflection representation on k-dim V_Z",
         {{"<triv,triv>^-1", 2}}},
        {"D_n, n odd", "(a1,a1,...,ak,ak), distinct odd a_i", "(Z/2)^(k-1)",
         "reflection representation on a (k-1)-dim summand, trivial on a line",
         {{"<triv,triv>^-1", 2}}},
        {"E7", "A4+A1", "Z/2", "twice the sign representation on 2-dim V_Z", {{"<triv,triv>^-1", 2}}},
        {"E6", "D4(a1)", "S3", "reflection representation on 2-dim V_Z",
         {{"<triv,triv>^-1", 1}, {"<refl,refl>^-1", 3}, {"<triv,refl>^-1", 1}}},
    };
    return table;
}

}  // namespace greenpoly
