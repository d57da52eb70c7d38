#pragma once

#include "greenpoly/poly.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace greenpoly {

enum class Family { A, B, C, D, G2 };

struct WeylType {
    Family family = Family::A;
    int rank = 1;

    std::string name() const;  // "A3", "C2", "G2"
    bool delta_trivial() const;  // w0 central
    friend bool operator==(const WeylType&, const WeylType&) = default;
};

// Throws std::invalid_argument for an unknown family or unsupported rank.
WeylType make_type(const std::string& family, int rank);
void check_supported(const WeylType& t);

using Partition = std::vector<int>;  // weakly decreasing, positive parts

// Signed permutation of the ambient coordinates: e_i -> sign[i] * e_{perm[i]}.
// Type A uses all signs +1; G2 uses a global sign on the 3-dim ambient space.
struct GroupElement {
    std::vector<int8_t> perm;
    std::vector<int8_t> sign;

    int dim() const { return static_cast<int>(perm.size()); }
    static GroupElement identity(int m);
    GroupElement operator*(const GroupElement& o) const;  // (this o)(x) = this(o(x))
    GroupElement inverse() const;
    uint64_t key() const;
    std::vector<long> apply(const std::vector<long>& x) const;
    std::vector<double> apply(const std::vector<double>& x) const;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct ConjClass {
    GroupElement rep;
    long size = 0;
    std::string label;
    Partition pos_cycles, neg_cycles;  // signed cycle type (A: pos only)
    int split = 0;                     // D-type split classes: +1 / -1
    std::vector<int> word;             // reduced word of rep, simple indices 0-based
};

struct TwistedClass {
    GroupElement rep;
    long size = 0;
    long det_twist = 0;        // det_V(1 - w delta), from the explicit matrix on V
    bool elliptic = false;     // det_twist != 0
    int untwisted_class = -1;  // ordinary class of rep * w0
};

class WeylGroupData {
public:
    static std::shared_ptr<const WeylGroupData> build(const WeylType& t);

    const WeylType& type() const { return type_; }
    int rank() const { return type_.rank; }
    int ambient_dim() const { return ambient_; }
    long order() const { return order_; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    int num_irreps() const { return static_cast<int>(irrep_labels_.size()); }

    const std::vector<ConjClass>& classes() const { return classes_; }
    const ConjClass& conj_class(int c) const { return classes_.at(c); }
    const std::vector<std::string>& irrep_labels() const { return irrep_labels_; }
    int irrep_index(const std::string& label) const;  // -1 if absent
    long char_value(int irrep, int cls) const { return table_.at(irrep).at(cls); }
    const std::vector<std::vector<long>>& char_table() const { return table_; }
    long dim(int irrep) const { return table_.at(irrep).at(identity_class_); }

    const std::vector<int>& degrees() const { return degrees_; }
    IntPoly p_poly() const;  // prod (1 - q^{m_i})
    const IntPoly& refl_charpoly(int cls) const { return charpoly_.at(cls); }
    int sign_of_class(int cls) const { return class_sign_.at(cls); }
    int sgn_index() const { return sgn_index_; }
    int triv_index() const { return triv_index_; }
    int identity_class() const { return identity_class_; }
    int refl_index() const;  // reflection representation, -1 if not unique

    const GroupElement& w0() const { return w0_; }
    int w0_class() const { return class_of(w0_); }
    // class of w0 * rep(c); meaningful as a class map only when w0 is central
    int w0_times_class(int c) const { return w0_mult_.at(c); }

    // simple reflections and their roots in ambient coordinates
    const std::vector<GroupElement>& generators() const { return gens_; }
    const std::vector<std::vector<long>>& simple_roots() const { return roots_; }
    int coxeter_m(int i, int j) const;

    int class_of(const GroupElement& w) const;
    std::vector<int> reduced_word(const GroupElement& w) const;
    IntPoly charpoly(const GroupElement& w) const;  // det_V(1 - q w)
    // integer matrix of w on V in a lattice basis (simple roots for A and G2)
    std::vector<std::vector<long>> v_matrix(const GroupElement& w) const;
    int sign_of(const GroupElement& w) const;

    const std::vector<GroupElement>& elements() const { return elements_; }
    int element_class(size_t idx) const { return elem_class_.at(idx); }

    std::vector<int> minus_one_elliptic_classes() const;
    std::vector<int> elliptic_classes() const;  // det_V(1 - w) != 0
    const std::vector<TwistedClass>& delta_twisted_classes() const { return twisted_; }
    int delta_elliptic_count() const;

private:
    WeylGroupData() = default;
    void enumerate_elements();
    void build_classes();
    void build_characters();
    void build_twisted();
    void verify() const;

    WeylType type_;
    int ambient_ = 0;
    long order_ = 0;
    std::vector<GroupElement> gens_;
    std::vector<std::vector<long>> roots_;
    std::vector<long> dominant_;
    std::vector<GroupElement> elements_;
    std::vector<int> elem_class_;
    std::vector<std::pair<uint64_t, int>> index_;  // sorted key -> element index
    std::vector<ConjClass> classes_;
    std::vector<IntPoly> charpoly_;
    std::vector<int> class_sign_;
    std::vector<std::string> irrep_labels_;
    std::vector<std::vector<long>> table_;
    std::vector<int> degrees_;
    GroupElement w0_;
    std::vector<int> w0_mult_;
    std::vector<TwistedClass> twisted_;
    int sgn_index_ = -1, triv_index_ = -1, identity_class_ = -1;

    int element_index(const GroupElement& w) const;
};

using GroupPtr = std::shared_ptr<const WeylGroupData>;

// Partition helpers shared by several modules.
std::vector<Partition> partitions_of(int n);  // decreasing lexicographic order
Partition transpose(const Partition& p);
bool dominates(const Partition& a, const Partition& b);  // a >= b
std::string partition_label(const Partition& p);        // "21", "0" for empty
Partition parse_partition(const std::string& s);       // "3,2" or "32"
long integer_det(std::vector<std::vector<long>> m);  // exact, Bareiss
long sn_character(const Partition& lambda, const Partition& mu);  // Murnaghan-Nakayama
long bn_character(const Partition& alpha, const Partition& beta, const Partition& pos,
                  const Partition& neg);

}  // namespace greenpoly
