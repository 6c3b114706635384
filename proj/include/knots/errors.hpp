#ifndef KNOTS_ERRORS_HPP
#define KNOTS_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace knots {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

// polyring
class AlignmentError : public Error { using Error::Error; };
class NonInvertibleSubstitution : public Error { using Error::Error; };
class SymmetryError : public Error { using Error::Error; };
class SizeError : public Error { using Error::Error; };
class DegenerateInput : public Error { using Error::Error; };
class EliminationError : public Error { using Error::Error; };

/** Root solver did not converge; carries the best residuals reached. */
class SolverFailure : public Error
{
    public:
        SolverFailure(const std::string& what, std::vector<double> residuals)
            : Error(what), best_residuals(std::move(residuals))
        {
        }

        std::vector<double> best_residuals;
};

// words
class BindingError : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

// twistknot / splice
class UnknotError : public Error { using Error::Error; };
class DegenerateCommutant : public Error { using Error::Error; };
class InvalidTorusRepresentation : public Error { using Error::Error; };
class PreconditionError : public Error { using Error::Error; };

}   // namespace knots

#endif
