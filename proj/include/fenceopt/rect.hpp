#pragma once
#include <string>

#include "fenceopt/errors.hpp"

namespace fenceopt {

// Bounding rectangle D with short side x and long side y. The constructor
// normalizes the order so x <= y always holds; every closed-form bound in
// this library assumes that.
class Rect {
public:
    Rect(double side_a, double side_b) {
        if (!(side_a > 0.0) || !(side_b > 0.0))
            throw DomainError("Rect: sides must be positive");
        x_ = side_a <= side_b ? side_a : side_b;
        y_ = side_a <= side_b ? side_b : side_a;
    }

    double x() const { return x_; } // short side
    double y() const { return y_; } // long side
    double area() const { return x_ * y_; }

private:
    double x_;
    double y_;
};

// How many rectangle sides a shape's boundary contacts with positive length.
enum class TouchClass { Zero, One, TwoAdjacent, TwoOpposite, Three, Four };

enum class Regime { QuarterDisk, StraightCut, ComplementQuarterDisk };

std::string to_string(TouchClass tc);
std::string to_string(Regime r);

} // namespace fenceopt
