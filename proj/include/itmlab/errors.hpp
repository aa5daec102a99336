#ifndef ITMLAB_ERRORS_HPP
#define ITMLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace itmlab {

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A float-mode decision (comparison, floor, branch) whose enclosures overlap.
// Exact modes never raise this.
class indeterminate_error : public error {
public:
    explicit indeterminate_error(const std::string& what) : error(what) {}
};

class io_error : public error {
public:
    explicit io_error(const std::string& what) : error(what) {}
};

}  // namespace itmlab

#endif
