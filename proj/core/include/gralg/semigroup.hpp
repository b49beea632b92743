#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gralg {

using SemigroupTable = std::vector<std::vector<std::size_t>>;

class FiniteSemigroup {
public:
  FiniteSemigroup() = default;

  // Validates shape, index range and associativity.
  static FiniteSemigroup make(std::vector<std::string> labels, SemigroupTable table);

  std::size_t size() const { return labels_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const SemigroupTable& table() const { return table_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  FiniteSemigroup opposite() const;

  bool operator==(const FiniteSemigroup& other) const = default;

private:
  std::vector<std::string> labels_;
  SemigroupTable table_;
};

struct AssociativityViolation {
  std::size_t a, b, c;
};

std::optional<AssociativityViolation> find_associativity_violation(const SemigroupTable& table);

bool is_left_zero_band(const FiniteSemigroup& s);
bool is_right_zero_band(const FiniteSemigroup& s);
bool is_cancellative(const FiniteSemigroup& s);
bool is_commutative(const FiniteSemigroup& s);

enum class SemigroupTag { T1, T2, T3, T3op, Z2, Trivial };

std::string_view to_string(SemigroupTag tag);
SemigroupTag parse_semigroup_tag(std::string_view name);

SemigroupTag classify_order2(const FiniteSemigroup& s);

// All associative tables on {0..order-1}, in lexicographic order of the flattened table.
std::vector<FiniteSemigroup> enumerate_semigroups(std::size_t order);

FiniteSemigroup catalog_semigroup(SemigroupTag tag);
FiniteSemigroup catalog_semigroup(std::string_view name);
FiniteSemigroup right_zero_band(std::size_t k);
FiniteSemigroup left_zero_band(std::size_t k);
FiniteSemigroup trivial_semigroup();

// Some bijection phi with phi(a*b) = phi(a)*phi(b), if one exists.
std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteSemigroup& a, const FiniteSemigroup& b);
bool are_isomorphic(const FiniteSemigroup& a, const FiniteSemigroup& b);

// Groups indices of the input list into isomorphism classes, preserving first-seen order.
std::vector<std::vector<std::size_t>> isomorphism_classes(const std::vector<FiniteSemigroup>& list);

} // namespace gralg
