// Designs held by subcode supports: the Assmus-Mattson check on the [7,4]
// Hamming code and a direct test on a code where the hypothesis fails.

#include <iostream>

#include "hwe/hwe.hpp"
#include "hwe/io.hpp"

int main() {
  using namespace hwe;
  const LinearCode hamming = parse_code("q=2\nn=7\nk=4\n1 0 0 0 1 1 0\n0 1 0 0 1 0 1\n0 0 1 0 0 1 1\n0 0 0 1 1 1 1\n");
  for (long r = 1; r <= 2; ++r) {
    const AMReport rep = am_check(hamming, r, 2);
    std::cout << "r=" << r << " t=2: hypothesis " << (rep.hypothesis_holds ? "holds" : "fails") << "\n";
    for (const auto& con : rep.conclusions)
      std::cout << "  S_{" << con.r << "," << con.i << "}(" << con.side << ") "
                << (con.report.is_design ? "2-design, lambda = " + con.report.lambda->get_str() : "not a design")
                << "\n";
  }

  const LinearCode c = parse_code("q=2\nn=6\nk=3\n1 1 0 0 0 0\n0 0 1 1 0 0\n0 0 0 0 1 1\n");
  std::cout << "S_{2,4} of the [6,3] code: " << to_json(is_t_design(subcode_supports(c, 2, 4), 1)).dump() << "\n";
  std::cout << "harmonic criterion agrees: " << std::boolalpha << harmonic_design_check(c, 2, 4, 1) << "\n";
}
