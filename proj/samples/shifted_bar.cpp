// Builds floor(t/4) and its 12-shift, prints both bars and checks the closed
// forms y xor z and (y xor (z+12)) - 12 on the pictured positions.

#include <iostream>

#include "chocobar/chocobar.hpp"

int main() {
  using namespace chocobar;

  const auto f = WidthFunction::floor_div(4);
  const auto f12 = shift(f, 12);

  std::cout << "CB(f, 8, 32), f(t) = floor(t/4)\n" << render_ascii(f, {8, 32});
  const auto t = GrundyTable::build(f, 8, 32);
  std::cout << "G = " << grundy(f, {8, 32}, t) << ", 8 xor 32 = " << formula_plain(8, 32) << "\n\n";

  std::cout << "CB(f12, 8, 23), f12(t) = floor((t+12)/4)\n" << render_ascii(f12, {8, 23});
  const auto t12 = GrundyTable::build(f12, 8, 23);
  std::cout << "G = " << grundy(f12, {8, 23}, t12) << ", (8 xor 35) - 12 = " << formula_shifted(8, 23, 12)
            << '\n';
  std::cout << "12 admissible: " << std::boolalpha << check_shift_admissible(f, 12) << '\n';
  return 0;
}
