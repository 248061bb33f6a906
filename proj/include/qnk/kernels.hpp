#pragma once

// Application of an operator embedded on consecutive tensor factors,
// I^(pos) (x) A (x) I^(d-pos-width), without materialising the embedding.
// The *_serial variants materialise it and are kept as the reference.

#include "qnk/linalg.hpp"

namespace qnk::kernels {

// pos is the 0-based index of the first factor A acts on; A is n^width square.
CMatrix embed_block(const CMatrix& a, int pos, int width, int n, int d);

// E * m, computed block-wise; columns are distributed over OpenMP threads.
void apply_left_inplace(const CMatrix& a, int pos, int width, int n, int d, CMatrix& m);
CMatrix apply_left(const CMatrix& a, int pos, int width, int n, int d, const CMatrix& m);
CMatrix apply_left_serial(const CMatrix& a, int pos, int width, int n, int d, const CMatrix& m);

// m * E
CMatrix apply_right(const CMatrix& m, const CMatrix& a, int pos, int width, int n, int d);
CMatrix apply_right_serial(const CMatrix& m, const CMatrix& a, int pos, int width, int n, int d);

long ipow(long base, int e);

} // namespace qnk::kernels
