#ifndef INTERCLUST_ERRORS_HPP
#define INTERCLUST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace interclust {

// Error categories map to CLI exit codes: config 2, io 3, data 4.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct data_error : std::runtime_error {
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace interclust

#endif
