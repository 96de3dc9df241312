#pragma once

// Cyclic branched covers driven by a spine cocycle.
//
// For a one-vertex complex whose short link cycles are all essential in
// the spine, a pairing vector lambda is chosen so that every essential
// class pairs nonzero with it. Viewing lambda as a cochain (zero on the
// spanning tree), an N-sheeted cover is assembled: every edge and face
// acquires sheets 1..N, and the face lift (f, p) attaches its slot t to
// the lift of the slot's edge on sheet p shifted by the cochain value
// of spine edge (f, t). The complex is branched over the single vertex:
// all sheets share it.
//
// N is the smallest prime exceeding both (M + 1) * levels and the
// largest pairing |<lambda, c>|, where M bounds |cochain sums| over
// short no-backtrack link walks; this drives every short essential
// cycle apart in the cover, so the lifted links have combinatorial
// girth at least 8.

#include <vector>

#include "npcx/short_cycles.hpp"

namespace npcx {

// Sign-canonical (first nonzero entry positive), deduplicated, sorted
// classes of the given cycles. Throws if any class vanishes.
std::vector<std::vector<Int>> essential_classes(
    const PE2Complex& c, const LinkGraph& lk, const SpineGraph& sp,
    const std::vector<LinkCycle>& cycles);

// Deterministic greedy pairing vector: walk the classes in order and,
// whenever one pairs to zero, bump its first supported coordinate by
// the smallest positive amount that keeps all earlier pairings nonzero;
// finally divide by the common gcd.
std::vector<Int> choose_pairing(const std::vector<std::vector<Int>>& classes,
                                int rank);

Int max_pairing(const std::vector<Int>& lambda,
                const std::vector<std::vector<Int>>& classes);

// M: the largest |sum of cochain values| over no-backtrack walks of at
// most max_edges link edges (closing up through the tree adds nothing).
Int walk_pairing_bound(const PE2Complex& c, const LinkGraph& lk,
                       const SpineGraph& sp, const SpineCocycle& z,
                       int max_edges);

// Smallest prime strictly greater than max((m_bound + 1) * levels,
// pairing_max).
Int choose_sheet_count(const Int& m_bound, int levels,
                       const Int& pairing_max);

PE2Complex build_branched_cover(const PE2Complex& base, const SpineGraph& sp,
                                const SpineCocycle& z, int sheets);

// Structural certificates for a cover built by build_branched_cover.
bool cover_counts_ok(const PE2Complex& base, const PE2Complex& cover,
                     int sheets);
bool deck_rotation_ok(const PE2Complex& cover, int sheets);
bool projection_ok(const PE2Complex& base, const PE2Complex& cover);

// Lift id "<base>^(p)".
std::string lift_id(const std::string& base_id, int sheet);

}  // namespace npcx
