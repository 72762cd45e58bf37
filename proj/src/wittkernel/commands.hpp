#ifndef WITTKERNEL_COMMANDS_HPP
#define WITTKERNEL_COMMANDS_HPP

// One function per CLI command.  Each takes raw argument text, parses it,
// runs the classification and returns a Report; ParseError / DomainError /
// TheoremError propagate to the caller, which maps them to exit codes.

#include <optional>
#include <string>

#include "wittkernel/report.hpp"

namespace wk {

Report cmd_hilbert(const std::string& a, const std::string& b,
                   const std::optional<std::string>& place);
Report cmd_conic_classify(const std::string& a, const std::string& b);
Report cmd_conic_compare(const std::string& a, const std::string& b,
                         const std::string& a2, const std::string& b2);
Report cmd_quadric_classify(const std::string& form);
Report cmd_quadric_compare(const std::string& form1, const std::string& form2);
Report cmd_quadric_kernel(const std::string& form, const std::optional<std::string>& ext);
Report cmd_sb_compare(const std::string& cls1, const std::string& cls2, int64_t dim);
Report cmd_sb_vs_quadric(const std::string& cls, const std::string& form);
Report cmd_genus1_orbit(int64_t modulus, int64_t residue);
Report cmd_genus1_gate(int64_t period, bool non_cm, bool isolated_or_finite);

} // namespace wk

#endif
