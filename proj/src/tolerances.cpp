#include "qweyl/tolerances.hpp"

namespace qweyl {

namespace {
Tolerances active;
}

const Tolerances& tolerances() { return active; }

void set_tolerances(const Tolerances& tol) { active = tol; }

}  // namespace qweyl
