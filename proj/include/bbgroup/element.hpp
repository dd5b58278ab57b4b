#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace bbgroup {

/// Opaque handle to a group element. The payload is the backend's canonical
/// encoding (image list for permutations, row-major field indices for
/// matrices), so equality of elements is equality of payloads.
struct Element {
  std::uint32_t backend_id = 0;
  std::vector<std::uint16_t> payload;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    // FNV-1a over the payload words
    std::uint64_t h = 1469598103934665603ull ^ e.backend_id;
    for (auto w : e.payload) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace bbgroup

template <>
struct std::hash<bbgroup::Element> : bbgroup::ElementHash {};
