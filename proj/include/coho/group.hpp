#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "coho/base.hpp"

// Finite 2-groups from power-commutator presentations. Elements are normal
// words g1^e1 ... gn^en encoded as bit vectors; multiplication is built by
// collection and verified against the group axioms at load time.

namespace coho::grp {

struct PcPresentation {
    int ngens = 0;
    // pow_rel[i] = normal word for g_i^2, as a bitmask over generators > i.
    std::vector<std::uint32_t> pow_rel;
    // comm_rel[j][i] = normal word for [g_j, g_i], j > i, generators > j.
    std::vector<std::vector<std::uint32_t>> comm_rel;
    std::string source_name;
};

PcPresentation parse_pc_presentation(std::istream& in, const std::string& name = "");

class Group;

struct ElabSubgroup {
    int rank = 0;
    std::vector<int> element_indices;  // sorted, indices into the ambient group
    bool contains_C = false;

    bool operator==(const ElabSubgroup& o) const
    {
        return element_indices == o.element_indices;
    }
};

class Group {
public:
    // Builds the multiplication table by collection and verifies the group
    // axioms (Latin square, identity at 0, associativity).
    static Group from_presentation(const PcPresentation& pc);
    // Wraps an explicit table (used for subgroups); same verification.
    static Group from_table(std::vector<std::vector<int>> table, std::string name);

    int order() const { return order_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inv_[a]; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& element_names() const { return names_; }

    bool is_abelian() const;
    std::vector<int> centre() const;

    // Central elements of order dividing 2 (includes the identity).
    ElabSubgroup omega1_centre() const;
    // All elementary abelian subgroups containing Omega_1(Z(G)), including it,
    // sorted by rank then lexicographically by element indices.
    std::vector<ElabSubgroup> elab_above_C() const;
    // Maximal members of elab_above_C (every maximal elementary abelian
    // subgroup contains the central one).
    std::vector<ElabSubgroup> maximal_elabs() const;
    int prank() const;
    int delta0() const;  // prank(G) - prank(omega1_centre)

    // Multiplication table of a subgroup with elements reindexed 0..|V|-1 in
    // increasing ambient index (identity stays at 0).
    Group subgroup(const ElabSubgroup& v) const;

private:
    Group() = default;
    void finish(bool exhaustive_assoc);

    int order_ = 1;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    std::vector<std::string> names_;
    std::string name_;
};

Group load_group(std::istream& in, const std::string& name = "");
Group load_group_file(const std::string& path);

// Independent oracle for tests: maximum rank over all elementary abelian
// subgroups, found by exhaustive closure over commuting involutions.
int prank_exhaustive(const Group& g);

}  // namespace coho::grp
