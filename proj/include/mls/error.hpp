#ifndef MLS_ERROR_HPP
#define MLS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mls {

// Error categories map onto CLI exit codes: input -> 2, math -> 3, numeric -> 4.
enum class errkind { input, math, numeric };

class error : public std::runtime_error {
public:
    error(errkind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    errkind kind;
};

[[noreturn]] inline void input_error(const std::string& msg) { throw error(errkind::input, msg); }
[[noreturn]] inline void math_error(const std::string& msg) { throw error(errkind::math, msg); }
[[noreturn]] inline void numeric_error(const std::string& msg) { throw error(errkind::numeric, msg); }

} // namespace mls

#endif
