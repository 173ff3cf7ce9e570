#ifndef EDGECODE_ERRORS_HPP
#define EDGECODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edgecode {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define EDGECODE_DEFINE_ERROR(Name)                 \
    struct Name : Error {                           \
        using Error::Error;                         \
    };

EDGECODE_DEFINE_ERROR(NotAPrimePower)
EDGECODE_DEFINE_ERROR(Unsupported)
EDGECODE_DEFINE_ERROR(DivisionByZero)
EDGECODE_DEFINE_ERROR(FullEdge)
EDGECODE_DEFINE_ERROR(DuplicateLabels)
EDGECODE_DEFINE_ERROR(NotUniform)
EDGECODE_DEFINE_ERROR(BadParams)
EDGECODE_DEFINE_ERROR(ParseError)
EDGECODE_DEFINE_ERROR(InvalidVertex)
EDGECODE_DEFINE_ERROR(TooLarge)
EDGECODE_DEFINE_ERROR(DegenerateField)
EDGECODE_DEFINE_ERROR(LengthMismatch)
EDGECODE_DEFINE_ERROR(SearchTooLarge)
EDGECODE_DEFINE_ERROR(ZeroPolynomial)
EDGECODE_DEFINE_ERROR(EmbeddingMissing)
EDGECODE_DEFINE_ERROR(NotCovered)

#undef EDGECODE_DEFINE_ERROR

} // namespace edgecode

#endif
