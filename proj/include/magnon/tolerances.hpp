#pragma once

namespace magnon {

struct Tolerances {
  double truncation = 1e-12; // allowed missing probability mass
  double rank = 1e-12;       // |P|^2 above this counts toward the Schmidt rank
  double stability = 1e-12;  // |Gamma|, |Upsilon| must stay below 1 - stability
};

} // namespace magnon
