#pragma once

namespace richwords {

// Worker-count plumbing.  Env var RICHWORD_JOBS supplies the default; a
// nonpositive request falls back to it, then to the hardware count.  All
// parallel kernels merge deterministically, so results never depend on the
// job count.
int hardware_jobs();
int effective_jobs(int requested);
void set_jobs(int jobs);

}  // namespace richwords
