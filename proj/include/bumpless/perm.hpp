#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bumpless {

// Largest grid the library accepts. The enumeration oracle has its own, much
// smaller, bound (see oracle.hpp).
inline constexpr int kMaxN = 16;

// A permutation of {1..n} in one-line notation. All indices are 1-based.
class Permutation {
 public:
  static Permutation identity(int n);
  // Throws Errc::not_a_bijection on duplicates or out-of-range values and
  // Errc::malformed_input on an empty or oversized sequence.
  static Permutation from_images(std::vector<int> images);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  // w(i)
  int operator()(int i) const { return images_[i - 1]; }
  // w^{-1}(v)
  int preimage(int v) const { return inverse_[v - 1]; }

  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;
  int inversion_length() const;

  // Comma separated one-line notation, e.g. "2,5,1,6,3,4".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  Permutation(std::vector<int> images, std::vector<int> inverse)
      : images_(std::move(images)), inverse_(std::move(inverse)) {}

  std::vector<int> images_;
  std::vector<int> inverse_;
};

// Accepts "2,5,1,6,3,4", "[2,5,1,6,3,4]" or, for n <= 9, "251634".
Permutation parse_permutation(std::string_view text);

inline Permutation inverse(const Permutation& w) { return w.inverse(); }
inline int inversion_length(const Permutation& w) { return w.inversion_length(); }

// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

}  // namespace bumpless
