#pragma once

#include <string>
#include <vector>

#include "wedderkit/json_io.hpp"

namespace wk {

struct VerifyRow {
    std::string name;
    bool passed = false;
    std::string detail;  // summary on success, error message on failure
};

// Runs the cross-check battery on the built-in corpus: decomposition
// self-consistency over the standard fields, minimality against the raw
// component counts, the rank and embedding identity, finite field counts
// against the class orbit oracle, and descent of prime power minimality
// to the underlying prime.  Each row is independent; a failure is
// reported in place instead of aborting the run.
std::vector<VerifyRow> run_verification_suite();

Json verification_to_json(const std::vector<VerifyRow>& rows);
std::string verification_to_text(const std::vector<VerifyRow>& rows);

}  // namespace wk
