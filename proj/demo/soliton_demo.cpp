// Three solitons in the rank 3 box-ball system: their evolution, scattering
// data and the reconstruction of the state from its rigged configuration.

#include <iostream>

#include "kkr/kkr.hpp"

int main() {
  const auto start =
      kkr::BoxBallState::parse("1111222211113321111411111111111111111111111", 3);
  const auto trace = kkr::evolve_trace(start, kkr::infinite_carrier(start), 7);
  for (std::size_t t = 0; t < trace.size(); ++t)
    std::cout << "t=" << t << ": " << trace[t].format() << "\n";

  const auto& later = trace[4];
  const auto rc = kkr::classical_path_to_rc(later.word());
  std::cout << "\nrigged configuration at t=4\n" << kkr::render_ascii(rc);
  std::cout << "solitons:   " << kkr::to_string(kkr::intermediate_path(rc, 1)) << "\n";
  std::cout << "scattering: " << kkr::to_string(kkr::scattering_data(later)) << "\n";

  const auto rebuilt = kkr::inverse_scattering(rc);
  std::cout << "rebuilt:    " << rebuilt.format() << "\n";
  return rebuilt == later ? 0 : 1;
}
