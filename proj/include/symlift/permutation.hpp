#pragma once

#include <compare>
#include <string>
#include <vector>

namespace symlift {

// An element of Sym_n acting on [n] = {1..n}.
class Permutation {
 public:
  Permutation() = default;
  // `image[i-1]` is the image of i; throws InvalidArgument unless a bijection on [n].
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  // The n-cycle (1 2 ... n).
  static Permutation cycle(int n);

  int n() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& image() const { return image_; }

  std::vector<int> apply(const std::vector<int>& tuple) const;

  // (p * q)(i) = p(q(i)).
  Permutation operator*(const Permutation& q) const;
  Permutation inverse() const;
  bool is_identity() const;
  bool fixes_pointwise(const std::vector<int>& points) const;

  // Cycle notation, "()" for the identity.
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

// All n! permutations in lexicographic order of their image lists.
std::vector<Permutation> all_permutations(int n);

// {(1 2), (1 2 ... n)} for n >= 2, {} otherwise.
std::vector<Permutation> sym_generators(int n);

}  // namespace symlift
