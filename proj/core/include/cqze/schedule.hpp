#ifndef CQZE_SCHEDULE_HPP
#define CQZE_SCHEDULE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace cqze {

/// State of the transmission channel during one inner pass. A blocked pass
/// absorbs the channel amplitude; the two blocked variants differ only in
/// which sink receives the mass. An obstruction sits in the channel ahead of
/// the receiver's device, so when both would block the obstruction wins and
/// a pass carries a single state.
enum class ChannelState : std::uint8_t {
  kTransparent = 0,
  kBlockedByBob = 1,
  kBlockedByNoise = 2,
};

constexpr bool is_blocked(ChannelState s) { return s != ChannelState::kTransparent; }

/// Per-(big cycle, inner cycle) channel states, stored row-major with one
/// row per big cycle. Dimensions always match the protocol's (M, N) even
/// when the final row is unused by the default exit convention.
class BlockingSchedule {
 public:
  BlockingSchedule(int outer_cycles, int inner_cycles,
                   ChannelState fill = ChannelState::kTransparent)
      : outer_(outer_cycles), inner_(inner_cycles) {
    if (outer_cycles < 1 || inner_cycles < 1) {
      throw std::invalid_argument("BlockingSchedule: dimensions must be >= 1");
    }
    cells_.assign(static_cast<std::size_t>(outer_cycles) * inner_cycles, fill);
  }

  static BlockingSchedule uniform(int outer_cycles, int inner_cycles, ChannelState s) {
    return BlockingSchedule(outer_cycles, inner_cycles, s);
  }

  int outer_cycles() const { return outer_; }
  int inner_cycles() const { return inner_; }

  ChannelState at(int big_cycle, int inner_cycle) const {
    return cells_[index(big_cycle, inner_cycle)];
  }
  void set(int big_cycle, int inner_cycle, ChannelState s) {
    cells_[index(big_cycle, inner_cycle)] = s;
  }

  /// All N states of one big cycle, in pass order.
  std::span<const ChannelState> row(int big_cycle) const {
    return {cells_.data() + index(big_cycle, 0), static_cast<std::size_t>(inner_)};
  }

  int blocked_count() const {
    int k = 0;
    for (ChannelState s : cells_) k += is_blocked(s) ? 1 : 0;
    return k;
  }

 private:
  std::size_t index(int big_cycle, int inner_cycle) const {
    if (big_cycle < 0 || big_cycle >= outer_ || inner_cycle < 0 || inner_cycle >= inner_) {
      throw std::out_of_range("BlockingSchedule: cell index out of range");
    }
    return static_cast<std::size_t>(big_cycle) * inner_ + inner_cycle;
  }

  int outer_;
  int inner_;
  std::vector<ChannelState> cells_;
};

}  // namespace cqze

#endif  // CQZE_SCHEDULE_HPP
