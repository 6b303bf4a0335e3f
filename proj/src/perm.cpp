#include "bumpless/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "bumpless/error.hpp"

namespace bumpless {

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return from_images(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n == 0) throw Error(Errc::malformed_input, "empty permutation");
  if (n > kMaxN) {
    throw Error(Errc::malformed_input,
                "n = " + std::to_string(n) + " exceeds the supported maximum " +
                    std::to_string(kMaxN));
  }
  std::vector<int> inverse(images.size(), 0);
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > n) {
      throw Error(Errc::not_a_bijection,
                  "value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (inverse[v - 1] != 0) {
      throw Error(Errc::not_a_bijection, "value " + std::to_string(v) + " repeated");
    }
    inverse[v - 1] = i + 1;
  }
  return Permutation(std::move(images), std::move(inverse));
}

Permutation Permutation::inverse() const { return Permutation(inverse_, images_); }

int Permutation::inversion_length() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) {
      if (images_[i] > images_[j]) ++count;
    }
  }
  return count;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    text = trim(text.substr(1, text.size() - 2));
  }
  if (text.empty()) throw Error(Errc::malformed_input, "empty permutation text");

  std::vector<int> images;
  if (text.find(',') == std::string_view::npos) {
    // Compact digit form, only unambiguous for n <= 9.
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw Error(Errc::malformed_input,
                    std::string("unexpected character '") + c + "' in \"" + std::string(text) + "\"");
      }
      images.push_back(c - '0');
    }
    if (images.size() > 9) {
      throw Error(Errc::malformed_input, "digit form is limited to n <= 9; use commas");
    }
    return Permutation::from_images(std::move(images));
  }

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token = trim(text.substr(pos, comma - pos));
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw Error(Errc::malformed_input, "not an integer: \"" + std::string(token) + "\"");
    }
    images.push_back(value);
    pos = comma + 1;
  }
  return Permutation::from_images(std::move(images));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace bumpless
