#pragma once
#include <string>
#include <vector>

#include "mbs/lattice.hpp"

namespace mbs {

/// A codimension-one admissible subspace direction with its primitive
/// integer equation; affine members are {<e,v> = k}, k integer.
struct Wall {
    std::vector<size_t> span_idx;  // indices into System::phi spanning the direction
    VecZ e;                        // primitive, first nonzero entry positive
};

/// The pair (Phi, Lambda) in canonical lattice coordinates (Lambda = Z^r).
class System {
public:
    enum class ZeroPolicy { forbid, allow };

    System(size_t rank, std::vector<VecZ> phi, ZeroPolicy zp = ZeroPolicy::forbid);

    size_t rank() const { return rank_; }
    const std::vector<VecZ>& phi() const { return phi_; }
    bool has_zero_phi() const { return has_zero_; }
    /// Nonzero members of phi with their original indices.
    std::vector<size_t> nonzero_idx() const;
    bool spans() const { return spans_; }

    /// One Wall per distinct admissible hyperplane direction, sorted by
    /// equation.  Throws ValidationError when phi does not span.
    const std::vector<Wall>& walls() const;

private:
    size_t rank_;
    std::vector<VecZ> phi_;
    bool has_zero_ = false;
    bool spans_ = false;
    std::vector<Wall> walls_;
};

/// A connected regular region, addressed by the floor of every wall pairing.
struct Tope {
    VecQ witness;
    std::vector<Int> key;  // aligned with System::walls()

    bool operator==(const Tope& o) const { return key == o.key; }
};

bool is_regular(const System& sys, const VecQ& v);

/// Throws GenericityError when v lies on an affine wall.
Tope tope_of(const System& sys, const VecQ& v);

/// A subspace spanned by a subset of phi, with adapted lattice coordinates.
struct AdmissibleSubspace {
    std::vector<size_t> basis_idx;  // independent subset of phi spanning s
    size_t dim = 0;
    SubspaceChart chart;
};

/// All admissible subspaces including {0} and, when phi spans, V itself.
/// Sorted by dimension then by canonical span form.
std::vector<AdmissibleSubspace> admissible_subspaces(const System& sys);

/// Wall geometry bundle: adapted coordinates and the induced wall system.
struct WallData {
    SubspaceChart chart;            // chart of the wall direction subspace
    System subsystem;               // (Phi n W, Lambda n W) in chart coordinates
    std::vector<size_t> on_idx;     // phi indices lying in W
    std::vector<size_t> off_idx;    // phi indices off W
    VecZ preimage;                  // lattice vector g with <e,g> = 1
};

WallData wall_data(const System& sys, size_t wall_index);

struct FacetWitness {
    size_t wall_index;
    VecQ point;  // on the separating affine wall, regular for everything else
};

/// Interior point of the common facet of two adjacent topes, regular for the
/// induced wall system.  Throws ValidationError for non-adjacent topes or a
/// degenerate facet.
FacetWitness facet_witness(const System& sys, const Tope& t1, const Tope& t2);

} // namespace mbs
