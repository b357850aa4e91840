#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqp {

// Malformed input text; line and column are 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error(format(source, line, column, what)), line_(line), column_(column)
    {
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& source, std::size_t line, std::size_t column, const std::string& what)
    {
        std::string s = source;
        if (line)
            s += ":" + std::to_string(line);
        if (column)
            s += ":" + std::to_string(column);
        return s + ": " + what;
    }

    std::size_t line_, column_;
};

}  // namespace eqp
