#pragma once

#include <stdexcept>
#include <string>

namespace weyrkit {

// Non-conforming matrix shapes or out-of-range indices.
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed input text (rationals, matrix files, structure files).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

class NotAnEigenvalue : public std::invalid_argument {
public:
    explicit NotAnEigenvalue(const std::string& msg) : std::invalid_argument(msg) {}
};

// The characteristic polynomial does not split over the rationals.
class IrrationalSpectrum : public std::runtime_error {
public:
    explicit IrrationalSpectrum(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace weyrkit
