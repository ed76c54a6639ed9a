#ifndef QW_ERRORS_HPP
#define QW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qw {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// rootdata
struct UnsupportedType : Error {
  explicit UnsupportedType(const std::string& w) : Error("UnsupportedType: " + w) {}
};

// exactalg
struct NonExpandable : Error {
  explicit NonExpandable(const std::string& w) : Error("NonExpandable: " + w) {}
};

// jfun
struct NegativeCoordinate : Error {
  explicit NegativeCoordinate(const std::string& w) : Error("NegativeCoordinate: " + w) {}
};
struct InternalNonFactored : Error {
  explicit InternalNonFactored(const std::string& w) : Error("InternalNonFactored: " + w) {}
};
struct GradingMismatch : Error {
  explicit GradingMismatch(const std::string& w) : Error("GradingMismatch: " + w) {}
};

// charalg
struct SlotOverflow : Error {
  explicit SlotOverflow(const std::string& w) : Error("SlotOverflow: " + w) {}
};
struct NotHypersurface : Error {
  explicit NotHypersurface(const std::string& w) : Error("NotHypersurface: " + w) {}
};
struct InhomogeneousRelation : Error {
  explicit InhomogeneousRelation(const std::string& w) : Error("InhomogeneousRelation: " + w) {}
};

// demazure
struct NotInOrbit : Error {
  explicit NotInOrbit(const std::string& w) : Error("NotInOrbit: " + w) {}
};
struct InexactDivision : Error {
  explicit InexactDivision(const std::string& w) : Error("InexactDivision: " + w) {}
};
struct NormalizationFailure : Error {
  explicit NormalizationFailure(const std::string& w) : Error("NormalizationFailure: " + w) {}
};

// toda
struct SchemaError : Error {
  explicit SchemaError(const std::string& w) : Error("SchemaError: " + w) {}
};
struct NonInvariantEigenvalue : Error {
  explicit NonInvariantEigenvalue(const std::string& w) : Error("NonInvariantEigenvalue: " + w) {}
};
struct NotTriangular : Error {
  explicit NotTriangular(const std::string& w) : Error("NotTriangular: " + w) {}
};
struct SingularCoefficient : Error {
  explicit SingularCoefficient(const std::string& w) : Error("SingularCoefficient: " + w) {}
};
struct InconsistentSystem : Error {
  explicit InconsistentSystem(const std::string& w) : Error("InconsistentSystem: " + w) {}
};
struct BoxExceeded : Error {
  explicit BoxExceeded(const std::string& w) : Error("BoxExceeded: " + w) {}
};

}  // namespace qw

#endif
