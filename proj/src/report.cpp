#include "pglob/report.hpp"

#include <sstream>

namespace pglob {

void ValidationReport::add(std::string name, bool pass, std::string witness) {
    checks_.push_back({std::move(name), pass, std::move(witness)});
}

void ValidationReport::merge(const std::string& prefix, const ValidationReport& other) {
    for (const auto& c : other.checks_)
        checks_.push_back({prefix + "." + c.name, c.pass, c.witness});
}

bool ValidationReport::overall() const {
    for (const auto& c : checks_)
        if (!c.pass) return false;
    return true;
}

bool ValidationReport::passed(const std::string& name) const {
    for (const auto& c : checks_)
        if (c.name == name) return c.pass;
    return false;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks_) {
        os << (c.pass ? "[ok]   " : "[FAIL] ") << c.name;
        if (!c.pass && !c.witness.empty()) os << " -- " << c.witness;
        os << "\n";
    }
    return os.str();
}

}  // namespace pglob
