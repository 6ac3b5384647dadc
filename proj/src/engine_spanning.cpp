#include "ross/engine/spanning.hpp"

namespace ross::engine {

void SpanningInfoStack::push(SpanningInformation info) {
    items_.push_back(std::move(info));
    if (items_.size() > kHighWater) {
        while (items_.size() > kLowWater) items_.pop_front();
    }
    cursor_ = 0;
}

bool SpanningInfoStack::pop(SpanningInformation* out) {
    if (items_.empty()) return false;
    if (out) *out = std::move(items_.back());
    items_.pop_back();
    cursor_ = 0;
    return true;
}

bool SpanningInfoStack::current(const SpanningInformation** out) {
    if (cursor_ >= items_.size()) return false;
    *out = &items_[items_.size() - 1 - cursor_];
    ++cursor_;
    return true;
}

void SpanningInfoStack::reset_current_to_top() { cursor_ = 0; }

void SpanningInfoStack::discard_all() {
    items_.clear();
    cursor_ = 0;
}

}  // namespace ross::engine
