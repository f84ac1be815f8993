#include "schemekit/error.hpp"

#include <sstream>

namespace schemekit {

namespace {

std::string located(const std::string& what, std::size_t line, std::size_t column)
{
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << what;
    return os.str();
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(located(what, line, column)), line_(line), column_(column)
{
}

MalformedMatrix::MalformedMatrix(const std::string& what, std::size_t row, std::size_t column)
    : Error("cell (" + std::to_string(row) + ", " + std::to_string(column) + "): " + what),
      row_(row),
      column_(column)
{
}

const char* identity_name(Identity id) noexcept
{
    switch (id) {
    case Identity::shape: return "shape";
    case Identity::class_too_large: return "class-too-large";
    case Identity::identity_relation: return "identity-relation";
    case Identity::involution: return "involution";
    case Identity::valency_symmetry: return "valency-symmetry";
    case Identity::row_sum: return "row-sum";
    case Identity::valency_product: return "valency-product";
    case Identity::triangle: return "triangle";
    case Identity::order_sum: return "order-sum";
    }
    return "unknown";
}

namespace {

std::string describe(Identity identity, const std::array<std::size_t, 3>& idx, std::int64_t lhs,
                     std::int64_t rhs, const std::string& detail)
{
    std::ostringstream os;
    os << identity_name(identity) << " identity violated at (" << idx[0] << ", " << idx[1] << ", " << idx[2]
       << "): lhs=" << lhs << " rhs=" << rhs;
    if (!detail.empty()) os << " [" << detail << "]";
    return os.str();
}

}  // namespace

AxiomViolation::AxiomViolation(Identity identity, std::array<std::size_t, 3> indices, std::int64_t lhs,
                               std::int64_t rhs, const std::string& detail)
    : Error(describe(identity, indices, lhs, rhs, detail)),
      identity_(identity),
      indices_(indices),
      lhs_(lhs),
      rhs_(rhs)
{
}

}  // namespace schemekit
