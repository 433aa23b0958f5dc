#pragma once

#include <string>
#include <vector>

namespace tensorwalk::checks {

struct CheckReport {
    enum class Status { pass, fail, skipped };
    std::string name;
    Status status = Status::skipped;
    std::string details;  // first mismatch location/value when failing
};

struct CheckOptions {
    /// Run only checks whose name contains this substring (empty: all).
    std::string only;
    /// Test mode: perturb the computed data inside the named check so that
    /// exactly that check fails. Never set in production runs.
    std::string inject_fault;
};

/// Full regression suite; deterministic order (sorted by name).
std::vector<CheckReport> check_all(const CheckOptions& options = {});

std::vector<std::string> check_names();

/// Criterion number (1..12) a check belongs to.
int criterion_of(const std::string& check_name);

/// One-line label per criterion, for the acceptance runner.
std::string criterion_label(int criterion);

const char* status_name(CheckReport::Status s);

}  // namespace tensorwalk::checks
