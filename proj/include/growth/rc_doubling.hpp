#pragma once

#include <vector>

#include "growth/baseline.hpp"
#include "growth/geometry.hpp"
#include "growth/ops.hpp"

namespace growth {

// Parallel row/column doubling. For east: every column is translated east by
// the number of doubled columns strictly west of it, and each doubled column
// additionally leaves a copy one further east. West/north/south mirror this.
Shape apply_rc(const Shape& s, const RcOp& op);

// Single-line doubling: the near side stays, the far side (doubled line
// inclusive) translates by one. Equals apply_rc with a singleton index set.
Shape apply_single_rc(const Shape& s, Axis axis, Direction d, int index);

// Breaks a parallel op into single-line ops (near side first), re-addressing
// indices after each intermediate shift. Sequentially equal to apply_rc.
std::vector<RcOp> serialize_parallel(const Shape& s, const RcOp& op);

// True iff `to` is reachable from `from` by RC doubling: equal baselines and
// componentwise non-decreasing column/row multiplicities.
bool decide_rc(const Shape& from, const Shape& to);

// Parallel RC constructor, column phase then row phase: every run doubles all
// its copies while that fits the target, then tops up with its westmost
// (southmost) copies. At most 2(ceil(log2 n) + 1) steps for n = |to|.
// Throws OpError when decide_rc(from, to) is false. The returned constructor
// starts from normalize(from).
Constructor synthesize_rc(const Shape& from, const Shape& to);

}  // namespace growth
