#pragma once

#include <ostream>

#include "job.hpp"

namespace cli {

// writes the report body (no timing); throws brauer::Error
void run_job(Job& job, std::ostream& out);

// bundled oracle checks; returns the number of failures
int selftest(std::ostream& out);

} // namespace cli
