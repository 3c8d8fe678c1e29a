#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace cihilb {

// Multiset of positive generator degrees. Stored nondecreasing; rendered
// nonincreasing, e.g. "(46, 36, 32, 15, 12, 5)".
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<long> degrees) : a_(std::move(degrees)) {
    for (long v : a_)
      if (v <= 0) throw Error(Errc::invalid_argument, "degrees must be positive");
    std::sort(a_.begin(), a_.end());
  }
  DegreeSequence(std::initializer_list<long> degrees) : DegreeSequence(std::vector<long>(degrees)) {}

  // "2,5,9" in any order; whitespace is ignored.
  static DegreeSequence parse(std::string_view text) {
    std::vector<long> v;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
                 item.end());
      if (item.empty()) throw Error(Errc::invalid_argument, "empty entry in degree list");
      std::size_t used = 0;
      long x = 0;
      try {
        x = std::stol(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size()) throw Error(Errc::invalid_argument, "bad degree '" + item + "'");
      v.push_back(x);
    }
    if (v.empty()) throw Error(Errc::invalid_argument, "empty degree list");
    return DegreeSequence(std::move(v));
  }

  std::size_t codim() const { return a_.size(); }
  const std::vector<long>& ascending() const { return a_; }
  std::vector<long> descending() const { return {a_.rbegin(), a_.rend()}; }
  long sum() const { return std::accumulate(a_.begin(), a_.end(), 0L); }
  Integer product() const {
    Integer p = 1;
    for (long v : a_) p *= v;
    return p;
  }

  std::string to_string() const {
    std::string s = "(";
    for (auto it = a_.rbegin(); it != a_.rend(); ++it) {
      if (it != a_.rbegin()) s += ", ";
      s += std::to_string(*it);
    }
    return s + ")";
  }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence& x, const DegreeSequence& y) { return x.a_ <=> y.a_; }

 private:
  std::vector<long> a_;
};

// Integer partition with weakly decreasing positive parts; no trailing zeros.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : p_(std::move(parts)) {
    std::sort(p_.begin(), p_.end(), std::greater<>());
    while (!p_.empty() && p_.back() == 0) p_.pop_back();
    if (!p_.empty() && p_.back() < 0) throw Error(Errc::invalid_argument, "negative partition part");
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return p_; }
  std::size_t length() const { return p_.size(); }
  int weight() const { return std::accumulate(p_.begin(), p_.end(), 0); }
  int operator[](std::size_t i) const { return i < p_.size() ? p_[i] : 0; }

  // Parts padded with zeros to `n` entries.
  std::vector<int> padded(std::size_t n) const {
    std::vector<int> v = p_;
    v.resize(n, 0);
    return v;
  }

  // Number of distinct rearrangements of the padded exponent vector, i.e. the
  // number of monomials in M_lambda with n variables.
  Integer orbit_size(std::size_t n) const {
    if (p_.size() > n) return 0;
    Integer r = factorial(n);
    std::size_t i = 0;
    while (i < p_.size()) {
      std::size_t j = i;
      while (j < p_.size() && p_[j] == p_[i]) ++j;
      r /= factorial(j - i);
      i = j;
    }
    return r / factorial(n - p_.size());
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < p_.size(); ++i) s += (i ? "," : "") + std::to_string(p_[i]);
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& x, const Partition& y) { return x.p_ <=> y.p_; }

 private:
  std::vector<int> p_;
};

// Partitions of `weight` into at most `max_parts` parts, lex-descending.
inline std::vector<Partition> partitions(int weight, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, weight, weight);
  return out;
}

}  // namespace cihilb
