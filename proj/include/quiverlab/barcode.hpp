#pragma once

// Stable barcodes on 1 <- 2 <- ... <- n: the rigid module with a given
// dimension vector, read off by stacking v_i spots over i and joining
// neighbours at each height.

#include <string>
#include <vector>

#include "quiverlab/linalg.hpp"

namespace quiverlab {

struct Bar {
  int a = 0;
  int b = 0;
  int multiplicity = 0;
  int top = 0;  // highest level the bar occupies

  friend bool operator==(const Bar&, const Bar&) = default;
};

struct Barcode {
  IntVector v;
  std::vector<Bar> bars;  // sorted by (a, b)

  IntVector dimension() const;
};

// Throws InvalidArgument on a negative entry.
Barcode stable_barcode(const IntVector& v);

// Ext(M_cd, M_ab) != 0 on linear A_n.  Throws InvalidArgument unless
// 1 <= c <= d and 1 <= a <= b.
bool interval_ext_nonzero(int c, int d, int a, int b);

bool is_rigid(const std::vector<Bar>& bars);

// "M[2,2] + M[1,2] + 2*M[1,3]", highest bars first; "0" when empty.
std::string render_text(const Barcode& code);
std::string render_svg(const Barcode& code);

}  // namespace quiverlab
