#pragma once

#include <stdexcept>
#include <string>

namespace domchrom
{
    /// Base of everything this library throws.
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// A graph, digraph, coloring or family parameter violates its invariants.
    class InvalidArgument : public Error
    {
        public:
            using Error::Error;
    };

    /// A cost guard (sweep edge limit, oracle vertex limit, bitmask width) was exceeded.
    class GuardExceeded : public Error
    {
        public:
            using Error::Error;
    };

    /// Operation needs a dominator coloring but the instance has none in the chosen mode.
    class Infeasible : public Error
    {
        public:
            using Error::Error;
    };

    class ParseError : public Error
    {
        public:
            ParseError(int line, const std::string & what) :
                Error("line " + std::to_string(line) + ": " + what),
                _line(line)
            {
            }

            auto line() const -> int { return _line; }

        private:
            int _line;
    };
}
