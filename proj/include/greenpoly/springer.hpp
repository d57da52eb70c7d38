#pragma once

#include "greenpoly/weyl.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace greenpoly {

struct OrbitLabel {
    Partition partition;
    WeylType ambient;
};

bool valid_orbit(const OrbitLabel& o);
int orbit_size_n(const WeylType& t);  // n for GL(n)/PGL(n), 2n for Sp(2n)

struct ComponentGroup {
    enum class Kind { Trivial, ElementaryAbelian, S3 };
    Kind kind = Kind::Trivial;
    int k = 0;  // rank of the elementary abelian group

    int order() const;
    int num_chars() const;
    // elementary abelian: element x and character phi are bitmasks over the
    // generators, phi(x) = (-1)^{|phi & x|}; S3 uses classes 1,(12),(123)
    std::vector<std::vector<long>> char_table() const;
    std::vector<long> class_sizes() const;
    std::vector<int> springer_type;  // characters of Springer type
    std::string kind_name() const;

    static ComponentGroup trivial();
    static ComponentGroup elementary(int k);
};

// An A(e)-module given by its character on the group elements (classes for S3).
struct MBlock {
    int d = 1;    // grading degree: det(1 - q^d x)
    int dim = 0;
    std::vector<long> chi;
};

struct MRep {
    int vz_dim = 0;
    std::vector<long> vz_char;
    std::vector<MBlock> md_blocks;
};

struct SpringerOrbit {
    Partition partition;
    int d_e = 0;
    ComponentGroup comp;
    bool has_m = false;
    MRep m;
};

struct SpringerPair {
    int orbit = 0;
    int local_system = 0;  // character index of A(e)
    std::string irrep;     // W-irrep label
    int irrep_index = -1;  // resolved against the ambient group
};

class TableError : public std::runtime_error {
public:
    TableError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(where) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

struct SpringerTable {
    WeylType type;
    std::vector<SpringerOrbit> orbits;  // larger orbits first
    std::vector<SpringerPair> pairs;    // grouped by orbit, same order
    // geq[i][j]: orbit j lies in the closure of orbit i (reflexive, transitive)
    std::vector<std::vector<bool>> geq;

    int num_pairs() const { return static_cast<int>(pairs.size()); }
    std::vector<int> pairs_of(int orbit) const;
    int find_orbit(const Partition& p) const;  // -1 if absent
    int find_pair(const Partition& p, const std::string& local_system) const;
    std::string local_system_label(int pair) const;
    bool comparable(int a, int b) const { return geq[a][b] || geq[b][a]; }

    // Checks bijectivity onto irreps of g, closure order, orbit ordering; throws TableError.
    void validate(const WeylGroupData& g);
};

SpringerTable table_typeA(int n);   // GL(n) / PGL(n), W = S_n
SpringerTable table_typeC(int n, const std::string& dir = "");  // Sp(2n), n in {1, 2, 3}
SpringerTable builtin_table(const WeylType& t, const std::string& dir = "");

// Data directory: explicit argument, else $GREENPOLY_DATA_DIR, else the build default.
std::string data_dir(const std::string& override_dir = "");
SpringerTable load_table(const std::string& path);
SpringerTable parse_table(const std::string& json_text, const std::string& origin);
std::string export_table(const SpringerTable& t);

bool nsol_predicate(const OrbitLabel& o);
int d_e_formula(const OrbitLabel& o);  // (dim Z(e) - rank)/2

ComponentGroup component_group_typeC(const Partition& p);
MRep m_rep_typeA(const Partition& p);
MRep m_rep_typeC(const Partition& p, const ComponentGroup& a);

// tr_M(x) = det_{V_Z}(1 - q x) prod_d det_{M(d)}(1 - q^d x)
IntPoly tr_M(const SpringerOrbit& o, int x);
// (1/|A|) sum_x phi(x) phi'(x) tr_M(x)
IntPoly q_M_pairing(const SpringerOrbit& o, int phi, int phi2);
// M(1)-block of the (q,M)-pairing Gram over Springer-type characters is nonzero
bool quasidistinguished_predicate(const SpringerOrbit& o);

// Reference values for orbits outside the built-in families; no computation behind them.
struct ExceptionEntry {
    std::string group, orbit, comp_group, vz_action;
    std::vector<std::pair<std::string, int>> minus_one_pairings;
};
const std::vector<ExceptionEntry>& exception_table();

}  // namespace greenpoly
