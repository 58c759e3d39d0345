#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace renyi {

/// Extended-real entropy order.  The limit orders {-inf, 0, 1, +inf} carry
/// exact tags so callers can dispatch to the dedicated closed forms instead
/// of evaluating a generic power sum at a removable singularity.
class Order {
public:
    enum class Tag { neg_inf, zero, one, pos_inf, finite };

    /// Finite orders within 1e-9 of 0 or 1 collapse to the exact tag.
    static Order of(double alpha) {
        if (std::isnan(alpha)) throw std::invalid_argument("Order: nan");
        if (alpha == std::numeric_limits<double>::infinity()) return pos_inf();
        if (alpha == -std::numeric_limits<double>::infinity()) return neg_inf();
        if (std::fabs(alpha) <= kCollapseTol) return zero();
        if (std::fabs(alpha - 1.0) <= kCollapseTol) return one();
        return Order(Tag::finite, alpha);
    }

    static Order neg_inf() { return Order(Tag::neg_inf, -std::numeric_limits<double>::infinity()); }
    static Order zero()    { return Order(Tag::zero, 0.0); }
    static Order one()     { return Order(Tag::one, 1.0); }
    static Order pos_inf() { return Order(Tag::pos_inf, std::numeric_limits<double>::infinity()); }

    Tag tag() const { return tag_; }
    bool is(Tag t) const { return tag_ == t; }
    bool is_finite() const { return tag_ == Tag::finite; }

    /// Numeric value; +/-inf for the infinite tags.
    double alpha() const { return alpha_; }

    bool positive() const { return tag_ == Tag::pos_inf || tag_ == Tag::one || (tag_ == Tag::finite && alpha_ > 0.0); }
    bool negative() const { return tag_ == Tag::neg_inf || (tag_ == Tag::finite && alpha_ < 0.0); }

    std::string str() const {
        switch (tag_) {
            case Tag::neg_inf: return "-inf";
            case Tag::zero:    return "0";
            case Tag::one:     return "1";
            case Tag::pos_inf: return "inf";
            default: break;
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", alpha_);
        return buf;
    }

    friend bool operator==(const Order& a, const Order& b) {
        if (a.tag_ != b.tag_) return false;
        return a.tag_ != Tag::finite || a.alpha_ == b.alpha_;
    }

    static constexpr double kCollapseTol = 1e-9;

private:
    Order(Tag t, double a) : tag_(t), alpha_(a) {}
    Tag tag_;
    double alpha_;
};

/// Entropy value in nats together with the order it was computed at.
struct EntropyValue {
    double nats = 0.0;
    Order order = Order::one();

    double bits() const { return nats / std::log(2.0); }
};

}  // namespace renyi
