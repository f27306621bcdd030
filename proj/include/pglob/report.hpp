#pragma once

#include <string>
#include <vector>

namespace pglob {

/// One verification step: name, outcome, and a witness description when it
/// failed (the witness pins down concrete elements violating the condition).
struct Check {
    std::string name;
    bool pass = false;
    std::string witness;
};

/// Ordered list of checks; overall passes iff every check does.
class ValidationReport {
public:
    void add(std::string name, bool pass, std::string witness = "");
    /// Merges another report under a name prefix ("prefix.check").
    void merge(const std::string& prefix, const ValidationReport& other);

    bool overall() const;
    const std::vector<Check>& checks() const { return checks_; }
    bool passed(const std::string& name) const;
    std::string summary() const;

private:
    std::vector<Check> checks_;
};

}  // namespace pglob
