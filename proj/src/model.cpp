#include "plclique/model.hpp"

namespace plclique {

std::string_view to_string(Kernel k) noexcept {
  switch (k) {
    case Kernel::exponential: return "exponential";
    case Kernel::capped: return "capped";
    case Kernel::ratio: return "ratio";
  }
  return "?";
}

std::string_view to_string(Normalization n) noexcept {
  return n == Normalization::by_n ? "by-n" : "by-weight-sum";
}

Kernel parse_kernel(std::string_view s) {
  if (s == "exponential") return Kernel::exponential;
  if (s == "capped") return Kernel::capped;
  if (s == "ratio") return Kernel::ratio;
  throw ValidationError("unknown kernel '" + std::string(s) + "'");
}

Normalization parse_normalization(std::string_view s) {
  if (s == "by-n") return Normalization::by_n;
  if (s == "by-weight-sum") return Normalization::by_weight_sum;
  throw ValidationError("unknown normalization '" + std::string(s) + "'");
}

}  // namespace plclique
