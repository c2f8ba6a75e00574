#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace thyme {

// Append-at-back, pop-at-front queue whose live range stays contiguous so it
// can be handed to the span-based kernels.
template <class T>
class FifoBuffer {
 public:
  void push_back(const T& v) { data_.push_back(v); }

  void pop_front() {
    assert(head_ < data_.size());
    ++head_;
    if (head_ == data_.size()) {
      data_.clear();
      head_ = 0;
    } else if (head_ >= 32 && head_ * 2 >= data_.size()) {
      data_.erase(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(head_));
      head_ = 0;
    }
  }

  const T& front() const { return data_[head_]; }
  const T& back() const { return data_.back(); }
  std::size_t size() const noexcept { return data_.size() - head_; }
  bool empty() const noexcept { return size() == 0; }

  std::span<const T> view() const noexcept {
    return std::span<const T>(data_).subspan(head_);
  }

  void clear() {
    data_.clear();
    head_ = 0;
  }

 private:
  std::vector<T> data_;
  std::size_t head_ = 0;
};

}  // namespace thyme
