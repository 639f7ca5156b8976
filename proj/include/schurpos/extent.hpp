#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schurpos {

// A nonnegative count that may be infinite. Used for the parameters K and L
// of the strict-positivity criterion; infinity is a first-class value, not
// an integer sentinel.
class Extent {
 public:
  Extent(long count) : infinite_(false), value_(count) {  // NOLINT: implicit by design
    if (count < 0) throw std::invalid_argument("extent must be nonnegative");
  }

  static Extent infinity() {
    Extent e(0);
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && value_ == 0; }

  long value() const {
    if (infinite_) throw std::logic_error("value() on infinite extent");
    return value_;
  }

  std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

  static Extent parse(std::string_view text) {
    if (text == "inf" || text == "infinity") return infinity();
    if (text.empty()) throw std::invalid_argument("empty extent literal");
    long v = 0;
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("bad extent literal: \"" + std::string(text) + "\"");
      }
      v = v * 10 + (c - '0');
    }
    return Extent(v);
  }

  friend bool operator==(const Extent&, const Extent&) = default;

 private:
  bool infinite_;
  long value_;
};

}  // namespace schurpos
