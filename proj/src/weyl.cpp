#include "greenpoly/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace greenpoly {

// ------------------------------------------------------------ types

std::string WeylType::name() const {
    switch (family) {
        case Family::A: return "A" + std::to_string(rank);
        case Family::B: return "B" + std::to_string(rank);
        case Family::C: return "C" + std::to_string(rank);
        case Family::D: return "D" + std::to_string(rank);
        case Family::G2: return "G2";
    }
    return "?";
}

bool WeylType::delta_trivial() const {
    switch (family) {
        case Family::A: return rank == 1;
        case Family::D: return rank % 2 == 0;
        default: return true;
    }
}

void check_supported(const WeylType& t) {
    auto bad = [&](int lo, int hi) {
        return t.rank < lo || t.rank > hi;
    };
    bool unsupported = false;
    switch (t.family) {
        case Family::A: unsupported = bad(1, 8); break;
        case Family::B:
        case Family::C: unsupported = bad(1, 6); break;
        case Family::D: unsupported = bad(3, 6); break;
        case Family::G2: unsupported = t.rank != 2; break;
    }
    if (unsupported)
        throw std::invalid_argument("unsupported rank " + std::to_string(t.rank) + " for type " +
                                    t.name().substr(0, 1));
}

WeylType make_type(const std::string& family, int rank) {
    WeylType t;
    t.rank = rank;
    if (family == "A" || family == "a")
        t.family = Family::A;
    else if (family == "B" || family == "b")
        t.family = Family::B;
    else if (family == "C" || family == "c")
        t.family = Family::C;
    else if (family == "D" || family == "d")
        t.family = Family::D;
    else if (family == "G2" || family == "g2" || family == "G" || family == "g") {
        t.family = Family::G2;
        if (rank == 0) t.rank = 2;
    } else
        throw std::invalid_argument("unknown Weyl type '" + family + "'");
    check_supported(t);
    return t;
}

// ------------------------------------------------------------ partitions

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

Partition transpose(const Partition& p) {
    Partition t;
    if (p.empty()) return t;
    for (int j = 1; j <= p[0]; ++j) {
        int c = 0;
        for (int x : p)
            if (x >= j) ++c;
        t.push_back(c);
    }
    return t;
}

bool dominates(const Partition& a, const Partition& b) {
    long sa = 0, sb = 0;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return sa == sb;
}

std::string partition_label(const Partition& p) {
    if (p.empty()) return "0";
    bool big = std::any_of(p.begin(), p.end(), [](int x) { return x >= 10; });
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (big && i) s += ",";
        s += std::to_string(p[i]);
    }
    return s;
}

Partition parse_partition(const std::string& s) {
    Partition p;
    if (s.empty() || s == "0") return p;
    if (s.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos <= s.size()) {
            size_t e = s.find(',', pos);
            if (e == std::string::npos) e = s.size();
            std::string tok = s.substr(pos, e - pos);
            if (tok.empty()) throw std::invalid_argument("bad partition '" + s + "'");
            p.push_back(std::stoi(tok));
            pos = e + 1;
        }
    } else {
        for (char c : s) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad partition '" + s + "'");
            p.push_back(c - '0');
        }
    }
    for (int x : p)
        if (x <= 0) throw std::invalid_argument("bad partition '" + s + "'");
    if (!std::is_sorted(p.rbegin(), p.rend()))
        throw std::invalid_argument("partition '" + s + "' is not weakly decreasing");
    return p;
}

namespace {

std::vector<int> beta_set(const Partition& p) {
    std::vector<int> b;
    int l = static_cast<int>(p.size());
    for (int i = 0; i < l; ++i) b.push_back(p[i] + (l - 1 - i));
    std::sort(b.begin(), b.end());
    return b;
}

// Removes a k-rim hook via beta numbers; calls f(new_beta, sign) per hook.
template <class F>
void each_rim_hook(const std::vector<int>& beta, int k, F&& f) {
    for (size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i], t = b - k;
        if (t < 0 || std::binary_search(beta.begin(), beta.end(), t)) continue;
        int between = 0;
        for (int x : beta)
            if (x > t && x < b) ++between;
        std::vector<int> nb = beta;
        nb[i] = t;
        std::sort(nb.begin(), nb.end());
        f(nb, between % 2 ? -1 : 1);
    }
}

bool beta_empty(const std::vector<int>& b) {
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i] != static_cast<int>(i)) return false;
    return true;
}

long mn_rec(const std::vector<int>& beta, const Partition& mu, size_t idx) {
    if (idx == mu.size()) return beta_empty(beta) ? 1 : 0;
    long sum = 0;
    each_rim_hook(beta, mu[idx], [&](const std::vector<int>& nb, int s) {
        sum += s * mn_rec(nb, mu, idx + 1);
    });
    return sum;
}

// cycles: (length, sign)
long bn_rec(const std::vector<int>& ba, const std::vector<int>& bb,
            const std::vector<std::pair<int, int>>& cyc, size_t idx) {
    if (idx == cyc.size()) return (beta_empty(ba) && beta_empty(bb)) ? 1 : 0;
    auto [k, eps] = cyc[idx];
    long sum = 0;
    each_rim_hook(ba, k, [&](const std::vector<int>& nb, int s) {
        sum += s * bn_rec(nb, bb, cyc, idx + 1);
    });
    each_rim_hook(bb, k, [&](const std::vector<int>& nb, int s) {
        sum += eps * s * bn_rec(ba, nb, cyc, idx + 1);
    });
    return sum;
}

}  // namespace

long sn_character(const Partition& lambda, const Partition& mu) {
    return mn_rec(beta_set(lambda), mu, 0);
}

long bn_character(const Partition& alpha, const Partition& beta, const Partition& pos,
                  const Partition& neg) {
    std::vector<std::pair<int, int>> cyc;
    for (int k : pos) cyc.emplace_back(k, 1);
    for (int k : neg) cyc.emplace_back(k, -1);
    return bn_rec(beta_set(alpha), beta_set(beta), cyc, 0);
}

// ------------------------------------------------------------ elements

GroupElement GroupElement::identity(int m) {
    GroupElement g;
    g.perm.resize(m);
    g.sign.assign(m, 1);
    std::iota(g.perm.begin(), g.perm.end(), 0);
    return g;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    int m = dim();
    GroupElement r;
    r.perm.resize(m);
    r.sign.resize(m);
    for (int i = 0; i < m; ++i) {
        r.perm[i] = perm[o.perm[i]];
        r.sign[i] = static_cast<int8_t>(o.sign[i] * sign[o.perm[i]]);
    }
    return r;
}

GroupElement GroupElement::inverse() const {
    int m = dim();
    GroupElement r;
    r.perm.resize(m);
    r.sign.resize(m);
    for (int i = 0; i < m; ++i) {
        r.perm[perm[i]] = static_cast<int8_t>(i);
        r.sign[perm[i]] = sign[i];
    }
    return r;
}

uint64_t GroupElement::key() const {
    uint64_t k = 0;
    for (int i = 0; i < dim(); ++i) k = (k << 5) | (uint64_t(perm[i]) << 1) | (sign[i] < 0 ? 1u : 0u);
    return k;
}

std::vector<long> GroupElement::apply(const std::vector<long>& x) const {
    std::vector<long> y(x.size(), 0);
    for (int i = 0; i < dim(); ++i) y[perm[i]] += sign[i] * x[i];
    return y;
}

std::vector<double> GroupElement::apply(const std::vector<double>& x) const {
    std::vector<double> y(x.size(), 0.0);
    for (int i = 0; i < dim(); ++i) y[perm[i]] += sign[i] * x[i];
    return y;
}

namespace {

GroupElement transposition(int m, int i, int j) {
    GroupElement g = GroupElement::identity(m);
    std::swap(g.perm[i], g.perm[j]);
    return g;
}

struct Cycles {
    Partition pos, neg;
    std::vector<std::pair<int, int>> all;  // (length, sign product)
};

Cycles cycles_of(const GroupElement& w) {
    int m = w.dim();
    std::vector<char> seen(m, 0);
    Cycles c;
    for (int i = 0; i < m; ++i) {
        if (seen[i]) continue;
        int len = 0, eps = 1, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            eps *= w.sign[j];
            j = w.perm[j];
            ++len;
        }
        c.all.emplace_back(len, eps);
        (eps > 0 ? c.pos : c.neg).push_back(len);
    }
    std::sort(c.pos.rbegin(), c.pos.rend());
    std::sort(c.neg.rbegin(), c.neg.rend());
    return c;
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

long dot(const std::vector<long>& a, const std::vector<long>& b) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

// ------------------------------------------------------------ build

std::shared_ptr<const WeylGroupData> WeylGroupData::build(const WeylType& t) {
    check_supported(t);
    std::shared_ptr<WeylGroupData> g(new WeylGroupData());
    g->type_ = t;
    int n = t.rank;
    switch (t.family) {
        case Family::A: {
            int m = n + 1;
            g->ambient_ = m;
            for (int i = 0; i + 1 < m; ++i) {
                g->gens_.push_back(transposition(m, i, i + 1));
                std::vector<long> r(m, 0);
                r[i] = 1;
                r[i + 1] = -1;
                g->roots_.push_back(r);
            }
            for (int d = 2; d <= m; ++d) g->degrees_.push_back(d);
            g->w0_ = GroupElement::identity(m);
            for (int i = 0; i < m; ++i) g->w0_.perm[i] = static_cast<int8_t>(m - 1 - i);
            break;
        }
        case Family::B:
        case Family::C:
        case Family::D: {
            g->ambient_ = n;
            for (int i = 0; i + 1 < n; ++i) {
                g->gens_.push_back(transposition(n, i, i + 1));
                std::vector<long> r(n, 0);
                r[i] = 1;
                r[i + 1] = -1;
                g->roots_.push_back(r);
            }
            std::vector<long> r(n, 0);
            GroupElement s = GroupElement::identity(n);
            if (t.family == Family::D) {
                std::swap(s.perm[n - 2], s.perm[n - 1]);
                s.sign[n - 2] = s.sign[n - 1] = -1;
                r[n - 2] = r[n - 1] = 1;
            } else {
                s.sign[n - 1] = -1;
                r[n - 1] = 1;
            }
            g->gens_.push_back(s);
            g->roots_.push_back(r);
            g->w0_ = GroupElement::identity(n);
            for (auto& x : g->w0_.sign) x = -1;
            if (t.family == Family::D) {
                for (int d = 2; d <= 2 * n - 2; d += 2) g->degrees_.push_back(d);
                g->degrees_.push_back(n);
                std::sort(g->degrees_.begin(), g->degrees_.end());
                if (n % 2) g->w0_.sign[n - 1] = 1;
            } else {
                for (int d = 2; d <= 2 * n; d += 2) g->degrees_.push_back(d);
            }
            break;
        }
        case Family::G2: {
            g->ambient_ = 3;
            g->gens_.push_back(transposition(3, 0, 1));
            GroupElement s = transposition(3, 1, 2);
            for (auto& x : s.sign) x = -1;
            g->gens_.push_back(s);
            g->roots_ = {{1, -1, 0}, {-2, 1, 1}};
            g->degrees_ = {2, 6};
            g->w0_ = GroupElement::identity(3);
            for (auto& x : g->w0_.sign) x = -1;
            break;
        }
    }
    // regular dominant vector
    int m = g->ambient_;
    if (t.family == Family::G2)
        g->dominant_ = {-1, -2, 3};
    else
        for (int i = 0; i < m; ++i) g->dominant_.push_back(m - i);

    g->enumerate_elements();
    g->build_classes();
    g->build_characters();
    g->build_twisted();
    g->verify();
    return g;
}

void WeylGroupData::enumerate_elements() {
    int m = ambient_;
    std::vector<int8_t> p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
        if (type_.family == Family::G2) {
            for (int s : {1, -1}) {
                GroupElement g;
                g.perm = p;
                g.sign.assign(m, static_cast<int8_t>(s));
                elements_.push_back(g);
            }
            continue;
        }
        int masks = type_.family == Family::A ? 1 : (1 << m);
        for (int mask = 0; mask < masks; ++mask) {
            if (type_.family == Family::D && __builtin_popcount(mask) % 2) continue;
            GroupElement g;
            g.perm = p;
            g.sign.resize(m);
            for (int i = 0; i < m; ++i) g.sign[i] = (mask >> i) & 1 ? -1 : 1;
            elements_.push_back(g);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    order_ = static_cast<long>(elements_.size());
    index_.reserve(elements_.size());
    for (size_t i = 0; i < elements_.size(); ++i) index_.emplace_back(elements_[i].key(), int(i));
    std::sort(index_.begin(), index_.end());
}

int WeylGroupData::element_index(const GroupElement& w) const {
    uint64_t k = w.key();
    auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(k, -1));
    if (it == index_.end() || it->first != k)
        throw std::logic_error("element not in group " + type_.name());
    return it->second;
}

int WeylGroupData::class_of(const GroupElement& w) const {
    return elem_class_[element_index(w)];
}

IntPoly WeylGroupData::charpoly(const GroupElement& w) const {
    IntPoly f(1);
    for (auto [len, eps] : cycles_of(w).all) f *= IntPoly::one_minus(len, eps);
    if (type_.family == Family::A) f = f.divexact(IntPoly::one_minus(1));
    if (type_.family == Family::G2) f = f.divexact(IntPoly::one_minus(1, w.sign[0]));
    return f;
}

int WeylGroupData::sign_of(const GroupElement& w) const {
    // det on V: determinant of the signed permutation, corrected on the complement
    int det = 1;
    for (auto [len, eps] : cycles_of(w).all) det *= eps * ((len % 2) ? 1 : -1);
    if (type_.family == Family::G2) det *= w.sign[0];
    return det;
}

std::vector<int> WeylGroupData::reduced_word(const GroupElement& w) const {
    std::vector<long> x = w.apply(dominant_);
    std::vector<int> word;
    for (;;) {
        int found = -1;
        for (size_t i = 0; i < roots_.size(); ++i)
            if (dot(x, roots_[i]) < 0) {
                found = static_cast<int>(i);
                break;
            }
        if (found < 0) break;
        x = gens_[found].apply(x);
        word.push_back(found);
    }
    return word;
}

int WeylGroupData::coxeter_m(int i, int j) const {
    GroupElement st = gens_.at(i) * gens_.at(j), x = st;
    int m = 1;
    GroupElement id = GroupElement::identity(ambient_);
    while (!(x == id)) {
        x = x * st;
        ++m;
    }
    return m;
}

void WeylGroupData::build_classes() {
    UnionFind uf(elements_.size());
    for (size_t i = 0; i < elements_.size(); ++i)
        for (const auto& s : gens_) uf.unite(int(i), element_index(s * elements_[i] * s));
    std::map<int, std::vector<int>> orbits;
    for (size_t i = 0; i < elements_.size(); ++i) orbits[uf.find(int(i))].push_back(int(i));

    // D-type: split classes are told apart by whether they contain an unsigned permutation
    for (auto& [root, members] : orbits) {
        ConjClass c;
        c.rep = elements_[members.front()];
        c.size = static_cast<long>(members.size());
        Cycles cyc = cycles_of(c.rep);
        c.pos_cycles = cyc.pos;
        c.neg_cycles = cyc.neg;
        if (type_.family == Family::D && cyc.neg.empty() &&
            std::all_of(cyc.pos.begin(), cyc.pos.end(), [](int k) { return k % 2 == 0; })) {
            bool has_unsigned = false;
            for (int e : members)
                if (std::all_of(elements_[e].sign.begin(), elements_[e].sign.end(),
                                [](int8_t s) { return s > 0; })) {
                    has_unsigned = true;
                    c.rep = elements_[e];
                    break;
                }
            c.split = has_unsigned ? 1 : -1;
        }
        classes_.push_back(c);
    }

    auto order_key = [&](const ConjClass& c) {
        if (type_.family == Family::G2) {
            // 1, ~A1, A1, A2, G2, A1+~A1
            int s = c.rep.sign[0];
            Cycles cy = cycles_of(c.rep);
            int maxlen = 0;
            for (auto [len, eps] : cy.all) maxlen = std::max(maxlen, len);
            static const int pos_rank[4] = {0, 0, 1, 3};
            static const int neg_rank[4] = {0, 5, 2, 4};
            int k = (s > 0 ? pos_rank : neg_rank)[maxlen];
            return std::make_tuple(Partition{k}, Partition{}, 0);
        }
        return std::make_tuple(c.neg_cycles, c.pos_cycles, -c.split);
    };
    std::sort(classes_.begin(), classes_.end(), [&](const ConjClass& a, const ConjClass& b) {
        return order_key(a) < order_key(b);
    });

    static const char* g2_names[6] = {"1", "~A1", "A1", "A2", "G2", "A1+~A1"};
    for (size_t ci = 0; ci < classes_.size(); ++ci) {
        ConjClass& c = classes_[ci];
        switch (type_.family) {
            case Family::A: c.label = partition_label(c.pos_cycles); break;
            case Family::G2: c.label = g2_names[std::get<0>(order_key(c))[0]]; break;
            default:
                c.label = partition_label(c.pos_cycles) + "|" + partition_label(c.neg_cycles);
                if (c.split) c.label += c.split > 0 ? "+" : "-";
        }
        c.word = reduced_word(c.rep);
        charpoly_.push_back(charpoly(c.rep));
        class_sign_.push_back(sign_of(c.rep));
    }
    elem_class_.assign(elements_.size(), -1);
    std::map<int, int> root_to_class;
    for (size_t ci = 0; ci < classes_.size(); ++ci)
        root_to_class[uf.find(element_index(classes_[ci].rep))] = int(ci);
    for (size_t i = 0; i < elements_.size(); ++i) elem_class_[i] = root_to_class.at(uf.find(int(i)));
    identity_class_ = class_of(GroupElement::identity(ambient_));
    for (size_t ci = 0; ci < classes_.size(); ++ci)
        w0_mult_.push_back(class_of(w0_ * classes_[ci].rep));
}

void WeylGroupData::build_characters() {
    int n = type_.rank;
    int nc = num_classes();
    switch (type_.family) {
        case Family::A:
            for (const auto& lam : partitions_of(n + 1)) {
                irrep_labels_.push_back(partition_label(lam));
                std::vector<long> row;
                for (const auto& c : classes_) row.push_back(sn_character(lam, c.pos_cycles));
                table_.push_back(row);
            }
            break;
        case Family::B:
        case Family::C: {
            for (int k = n; k >= 0; --k)
                for (const auto& a : partitions_of(k))
                    for (const auto& b : partitions_of(n - k)) {
                        irrep_labels_.push_back(partition_label(a) + "x" + partition_label(b));
                        std::vector<long> row;
                        for (const auto& c : classes_)
                            row.push_back(bn_character(a, b, c.pos_cycles, c.neg_cycles));
                        table_.push_back(row);
                    }
            break;
        }
        case Family::D: {
            std::vector<std::pair<Partition, Partition>> bip;
            for (int k = n; k >= 0; --k)
                for (const auto& a : partitions_of(k))
                    for (const auto& b : partitions_of(n - k)) bip.emplace_back(a, b);
            for (size_t i = 0; i < bip.size(); ++i) {
                const auto& [a, b] = bip[i];
                auto swapped = std::find(bip.begin(), bip.end(), std::make_pair(b, a)) - bip.begin();
                if (static_cast<size_t>(swapped) < i) continue;
                if (a != b) {
                    irrep_labels_.push_back(partition_label(a) + "x" + partition_label(b));
                    std::vector<long> row;
                    for (const auto& c : classes_)
                        row.push_back(bn_character(a, b, c.pos_cycles, c.neg_cycles));
                    table_.push_back(row);
                    continue;
                }
                // (a, a) restricts to the sum of two conjugate characters
                for (int eps : {1, -1}) {
                    irrep_labels_.push_back(partition_label(a) + "x" + partition_label(a) +
                                            (eps > 0 ? "+" : "-"));
                    std::vector<long> row;
                    for (const auto& c : classes_) {
                        long v = bn_character(a, a, c.pos_cycles, c.neg_cycles);
                        if (v % 2) throw std::logic_error("odd value on split character");
                        v /= 2;
                        if (c.split) {
                            Partition mu;
                            for (int k : c.pos_cycles) mu.push_back(k / 2);
                            long d = (1L << (mu.size() - 1)) * sn_character(a, mu);
                            v += eps * c.split * d;
                        }
                        row.push_back(v);
                    }
                    table_.push_back(row);
                }
            }
            break;
        }
        case Family::G2: {
            irrep_labels_ = {"1_0", "1_6", "1_3'", "1_3''", "2_1", "2_2"};
            // classes: 1, ~A1, A1, A2, G2, A1+~A1
            table_ = {{1, 1, 1, 1, 1, 1},   {1, -1, -1, 1, 1, 1},  {1, -1, 1, 1, -1, -1},
                      {1, 1, -1, 1, -1, -1}, {2, 0, 0, -1, 1, -2}, {2, 0, 0, -1, -1, 2}};
            break;
        }
    }
    if (num_irreps() != nc)
        throw std::logic_error(type_.name() + ": irreps and classes differ in number");
    for (int i = 0; i < num_irreps(); ++i) {
        bool triv = true, sgn = true;
        for (int c = 0; c < nc; ++c) {
            triv = triv && table_[i][c] == 1;
            sgn = sgn && table_[i][c] == class_sign_[c];
        }
        if (triv) triv_index_ = i;
        if (sgn && !triv) sgn_index_ = i;
    }
}

int WeylGroupData::irrep_index(const std::string& label) const {
    auto it = std::find(irrep_labels_.begin(), irrep_labels_.end(), label);
    return it == irrep_labels_.end() ? -1 : static_cast<int>(it - irrep_labels_.begin());
}

int WeylGroupData::refl_index() const {
    int found = -1;
    for (int i = 0; i < num_irreps(); ++i) {
        bool ok = true;
        for (int c = 0; c < num_classes() && ok; ++c)
            ok = table_[i][c] == -charpoly_[c].coeff(1);
        if (ok) {
            if (found >= 0) return -1;
            found = i;
        }
    }
    return found;
}

IntPoly WeylGroupData::p_poly() const {
    IntPoly p(1);
    for (int d : degrees_) p *= IntPoly::one_minus(d);
    return p;
}

long integer_det(std::vector<std::vector<long>> m) {
    int n = static_cast<int>(m.size());
    __int128 prev = 1;
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return static_cast<long>(sign * (n ? a[n - 1][n - 1] : 1));
}

std::vector<std::vector<long>> WeylGroupData::v_matrix(const GroupElement& w) const {
    int r = type_.rank, m = ambient_;
    std::vector<std::vector<long>> mat(r, std::vector<long>(r, 0));
    bool root_basis = type_.family == Family::A || type_.family == Family::G2;
    for (int j = 0; j < r; ++j) {
        std::vector<long> b(m, 0);
        if (root_basis) {
            b[j] = 1;
            b[j + 1] = -1;
        } else {
            b[j] = 1;
        }
        std::vector<long> y = w.apply(b);
        // coordinates in the basis e_i - e_{i+1} of the sum-zero space are partial sums
        long acc = 0;
        for (int i = 0; i < r; ++i) {
            if (root_basis) {
                acc += y[i];
                mat[i][j] = acc;
            } else {
                mat[i][j] = y[i];
            }
        }
        if (root_basis && acc + y[r] != 0) throw std::logic_error("v_matrix: image left V");
    }
    return mat;
}

void WeylGroupData::build_twisted() {
    UnionFind uf(elements_.size());
    std::vector<GroupElement> dgens;
    for (const auto& s : gens_) dgens.push_back(w0_ * s * w0_);
    for (size_t i = 0; i < elements_.size(); ++i)
        for (size_t k = 0; k < gens_.size(); ++k)
            uf.unite(int(i), element_index(gens_[k] * elements_[i] * dgens[k]));
    std::map<int, long> sizes;
    for (size_t i = 0; i < elements_.size(); ++i) sizes[uf.find(int(i))]++;
    for (auto [root, size] : sizes) {
        TwistedClass t;
        t.rep = elements_[root];
        t.size = size;
        GroupElement ww0 = t.rep * w0_;
        // 1 - w delta with delta = -w0 on V
        auto a = v_matrix(t.rep), b = v_matrix(w0_);
        int r = type_.rank;
        std::vector<std::vector<long>> m(r, std::vector<long>(r, 0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                long s = 0;
                for (int k = 0; k < r; ++k) s += a[i][k] * b[k][j];
                m[i][j] = (i == j ? 1 : 0) + s;
            }
        t.det_twist = integer_det(m);
        t.elliptic = t.det_twist != 0;
        t.untwisted_class = class_of(ww0);
        twisted_.push_back(t);
    }
}

std::vector<int> WeylGroupData::minus_one_elliptic_classes() const {
    std::vector<int> r;
    for (int c = 0; c < num_classes(); ++c)
        if (charpoly_[c].eval(-1) != 0) r.push_back(c);
    return r;
}

std::vector<int> WeylGroupData::elliptic_classes() const {
    std::vector<int> r;
    for (int c = 0; c < num_classes(); ++c)
        if (charpoly_[c].eval(1) != 0) r.push_back(c);
    return r;
}

int WeylGroupData::delta_elliptic_count() const {
    return static_cast<int>(std::count_if(twisted_.begin(), twisted_.end(),
                                          [](const TwistedClass& t) { return t.elliptic; }));
}

void WeylGroupData::verify() const {
    const std::string nm = type_.name();
    int nc = num_classes();
    long total = 0;
    for (const auto& c : classes_) total += c.size;
    if (total != order_) throw std::logic_error(nm + ": class sizes do not sum to |W|");
    long prod = 1;
    for (int d : degrees_) prod *= d;
    if (prod != order_) throw std::logic_error(nm + ": product of degrees differs from |W|");
    if (!(charpoly_[identity_class_] == IntPoly::one_minus(1).pow(type_.rank)))
        throw std::logic_error(nm + ": identity charpoly is not (1-q)^rank");
    if (triv_index_ < 0 || sgn_index_ < 0) throw std::logic_error(nm + ": triv/sgn not found");
    for (int i = 0; i < nc; ++i)
        for (int j = i; j < nc; ++j) {
            long row = 0, col = 0;
            for (int c = 0; c < nc; ++c) row += classes_[c].size * table_[i][c] * table_[j][c];
            for (int s = 0; s < nc; ++s) col += table_[s][i] * table_[s][j];
            if (row != (i == j ? order_ : 0))
                throw std::logic_error(nm + ": row orthogonality fails at " + irrep_labels_[i] +
                                       "," + irrep_labels_[j]);
            if (col != (i == j ? order_ / classes_[i].size : 0))
                throw std::logic_error(nm + ": column orthogonality fails at " +
                                       classes_[i].label + "," + classes_[j].label);
        }
    long npos = 0;
    for (int d : degrees_) npos += d - 1;
    if (static_cast<long>(reduced_word(w0_).size()) != npos)
        throw std::logic_error(nm + ": w0 is not the longest element");
}

}  // namespace greenpoly
