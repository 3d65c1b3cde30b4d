#ifndef COINV_ERROR_HPP
#define COINV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace coinv {

// Bad input: schema violations, ring/context mismatches, precondition failures.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation hit its configured degree, order or size budget before
// producing a certified answer. Never a silently truncated result.
class limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal consistency failure. Indicates a bug in this library, not bad
// input; several operations re-check theorem conclusions and raise this
// alarm if a conclusion fails on a certified run.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void expect(bool cond, const std::string& msg)
{
    if (!cond)
        throw input_error(msg);
}

inline void self_check(bool cond, const std::string& msg)
{
    if (!cond)
        throw internal_error(msg);
}

} // namespace coinv

#endif
