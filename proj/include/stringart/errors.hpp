#pragma once

#include <stdexcept>
#include <string>

namespace stringart {

// Base class for every domain error raised by this library. Callers that
// only care about "something went wrong mathematically" can catch this.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// algebra
struct BothConstantInV : Error {
    explicit BothConstantInV(const std::string& msg = "resultant: neither input involves the elimination variable")
        : Error(msg) {}
};
struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& msg = "operation undefined for the zero polynomial") : Error(msg) {}
};

// family
struct NonPositiveD : Error {
    explicit NonPositiveD(const std::string& msg = "family scale d must be positive") : Error(msg) {}
};
struct NonPositiveL : Error {
    explicit NonPositiveL(const std::string& msg = "ladder length L must be positive") : Error(msg) {}
};
struct DegenerateMember : Error {
    explicit DegenerateMember(const std::string& msg = "family member degenerates: x and y coefficients both vanish")
        : Error(msg) {}
};
struct VerticalLine : Error {
    explicit VerticalLine(const std::string& msg = "slope undefined: y coefficient vanishes") : Error(msg) {}
};
struct InvalidFamily : Error {
    explicit InvalidFamily(const std::string& msg = "polynomial does not define a line family") : Error(msg) {}
};

// envelope
struct LinearInParameter : Error {
    explicit LinearInParameter(const std::string& msg = "family is linear in its parameter: no envelope exists")
        : Error(msg) {}
};
struct ConstraintDegenerate : Error {
    explicit ConstraintDegenerate(const std::string& msg = "constraint does not genuinely restrict both parameters")
        : Error(msg) {}
};
struct NoUniqueContact : Error {
    explicit NoUniqueContact(const std::string& msg = "contact-point system is singular at this parameter")
        : Error(msg) {}
};

// conic
struct NotDegreeTwo : Error {
    explicit NotDegreeTwo(const std::string& msg = "curve is not of total degree 2") : Error(msg) {}
};
struct NotParabola : Error {
    explicit NotParabola(const std::string& msg = "curve does not classify as a parabola") : Error(msg) {}
};
struct DegenerateLine : Error {
    explicit DegenerateLine(const std::string& msg = "line coefficients a and b are both zero") : Error(msg) {}
};

// proofs
struct PoleCoincidence : Error {
    explicit PoleCoincidence(const std::string& msg = "denominator roots coincide with the numerator witness")
        : Error(msg) {}
};
struct NotQuadraticAfterSubstitution : Error {
    explicit NotQuadraticAfterSubstitution(const std::string& msg =
                                               "substituting the family line does not yield a quadratic")
        : Error(msg) {}
};

}  // namespace stringart
