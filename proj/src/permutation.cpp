#include "symlift/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symlift/error.hpp"

namespace symlift {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int v : image_) {
    if (v < 1 || v > n() || seen[static_cast<std::size_t>(v - 1)]) {
      throw InvalidArgument("not a permutation of [n]");
    }
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto img = identity(n).image_;
  std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(img));
}

Permutation Permutation::cycle(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = i % n + 1;
  return Permutation(std::move(img));
}

std::vector<int> Permutation::apply(const std::vector<int>& tuple) const {
  std::vector<int> out;
  out.reserve(tuple.size());
  for (int i : tuple) out.push_back((*this)(i));
  return out;
}

Permutation Permutation::operator*(const Permutation& q) const {
  if (q.n() != n()) throw InvalidArgument("composing permutations of different degree");
  std::vector<int> img(image_.size());
  for (int i = 1; i <= n(); ++i) img[static_cast<std::size_t>(i - 1)] = (*this)(q(i));
  Permutation p;
  p.image_ = std::move(img);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(image_.size());
  for (int i = 1; i <= n(); ++i) img[static_cast<std::size_t>((*this)(i) - 1)] = i;
  Permutation p;
  p.image_ = std::move(img);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

bool Permutation::fixes_pointwise(const std::vector<int>& points) const {
  return std::all_of(points.begin(), points.end(), [&](int i) { return (*this)(i) == i; });
}

std::string Permutation::str() const {
  std::ostringstream os;
  std::vector<char> seen(image_.size(), 0);
  bool any = false;
  for (int i = 1; i <= n(); ++i) {
    if (seen[static_cast<std::size_t>(i - 1)] || (*this)(i) == i) continue;
    any = true;
    os << '(';
    int j = i;
    bool first = true;
    while (!seen[static_cast<std::size_t>(j - 1)]) {
      seen[static_cast<std::size_t>(j - 1)] = 1;
      if (!first) os << ' ';
      first = false;
      os << j;
      j = (*this)(j);
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  auto img = Permutation::identity(n).image();
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Permutation> sym_generators(int n) {
  if (n < 2) return {};
  if (n == 2) return {Permutation::transposition(2, 1, 2)};
  return {Permutation::transposition(n, 1, 2), Permutation::cycle(n)};
}

}  // namespace symlift
