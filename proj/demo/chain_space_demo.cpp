// Walks ℓ = (2,2,3,3,3) through its chambers and prints the syzygy order of
// H*_G(N_c) in each, then shows ι for the polygon case ℓ = (1,1,1), c = 0.

#include <iostream>

#include "z2syz.hpp"

int main() {
  using namespace z2syz;

  ChainSpaceParams p;
  p.ell = {Rational(2), Rational(2), Rational(3), Rational(3), Rational(3)};
  for (const auto& ch : chambers(p.ell)) {
    p.c = ch.representative;
    const SyzygyReport r = full_report(p);
    std::cout << "c in " << ch.to_string() << ": " << verdict_string(r);
    if (r.free) std::cout << " (rank " << r.free_rank << ")";
    std::cout << "\n";
  }

  ChainSpaceParams polygon;
  polygon.ell = {Rational(1), Rational(1), Rational(1)};
  const IotaMatrix iota = build_iota(polygon);
  std::cout << "\niota for l = (1,1,1), c = 0:\n" << dump_matrix(iota.map, iota.rows, iota.cols);
}
