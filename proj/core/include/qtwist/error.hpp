#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qtwist {

// Every failure the kernel can report carries a stable machine-readable code
// ("QEqualsOne", "MissingRadical", ...) next to the human-readable message.
// The CLI maps any escaped Error to exit code 2 and embeds the code in the
// report.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw Error(code, what);
}

} // namespace qtwist
