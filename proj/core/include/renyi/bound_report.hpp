#pragma once

#include <optional>
#include <string>

#include "renyi/order.hpp"

namespace renyi {

/// A named bound value together with its validity annotation and, when the
/// bound contains an inner optimization, the argument achieving it.
struct BoundReport {
    std::string name;
    double value = 0.0;
    std::optional<Order> order;       // entropy/divergence order the bound was evaluated at
    std::string domain_note;          // nonempty when a precondition was relaxed (e.g. "vacuous")
    std::optional<double> inner_arg;  // optimizer argument (alpha, rho, or segment index)

    bool vacuous() const { return !domain_note.empty(); }
};

}  // namespace renyi
