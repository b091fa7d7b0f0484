#ifndef CQZE_KAHAN_HPP
#define CQZE_KAHAN_HPP

namespace cqze {

// Kahan-Neumaier compensated accumulator. Probability bookkeeping over
// ~10^6 tiny terms must stay well inside the 1e-10 conservation budget,
// which naive summation does not guarantee.
template <typename T = double>
class KahanSum {
 public:
  constexpr KahanSum() = default;
  constexpr explicit KahanSum(T initial) : sum_(initial) {}

  constexpr void add(T value) {
    const T t = sum_ + value;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (value >= 0 ? value : -value)) {
      comp_ += (sum_ - t) + value;
    } else {
      comp_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  constexpr T value() const { return sum_ + comp_; }

 private:
  T sum_ = 0;
  T comp_ = 0;
};

}  // namespace cqze

#endif  // CQZE_KAHAN_HPP
