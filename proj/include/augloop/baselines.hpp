#pragma once

#include "augloop/backends.hpp"
#include "augloop/dataset.hpp"
#include "augloop/types.hpp"

namespace augloop {

/// Untargeted teacher augmentation baseline: the teacher writes `k` variants
/// for every example, right or wrong, in one pass. Only the structural
/// format check is applied (unparseable output cannot become an example);
/// there is no miss-targeting and no near-duplicate filtering, which is
/// exactly what separates the baseline from the loop.
Dataset teacher_augment_all(Task task, const Dataset& data, TeacherClient& teacher,
                            int k = 1);

}  // namespace augloop
