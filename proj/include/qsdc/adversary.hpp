#pragma once

#include <vector>

#include "qsdc/group.hpp"
#include "qsdc/rng.hpp"

namespace qsdc {

/// Intercept-resend eavesdropper: each target particle is measured in the
/// computational basis while in transit and the collapsed state travels on.
GroupRegister intercept_resend(GroupRegister group, const std::vector<int>& target_qubits,
                               RngStream& rng);

}  // namespace qsdc
