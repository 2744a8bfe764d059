#ifndef LIQ_ERRORS_HPP
#define LIQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liq {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define LIQ_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                         \
  public:                                                             \
    explicit Name(const std::string& msg = #Name) : Error(msg) {}     \
  }

// cpt
LIQ_DEFINE_ERROR(TooFewRecords);
LIQ_DEFINE_ERROR(NonFiniteInput);
LIQ_DEFINE_ERROR(IntervalNonPositive);
LIQ_DEFINE_ERROR(SeriesTooShort);

// mechanics
LIQ_DEFINE_ERROR(NonConvergence);
LIQ_DEFINE_ERROR(NonPositiveStress);

// indices
LIQ_DEFINE_ERROR(EmptyProfile);

// curves
LIQ_DEFINE_ERROR(TooFewSamples);
LIQ_DEFINE_ERROR(DegenerateFit);

// surrogate
LIQ_DEFINE_ERROR(NoValidSample);
LIQ_DEFINE_ERROR(SchemaMissingGwt);
LIQ_DEFINE_ERROR(TooFewRows);
LIQ_DEFINE_ERROR(EmptyGrid);
LIQ_DEFINE_ERROR(SchemaMismatch);

// geostat
LIQ_DEFINE_ERROR(TooFewStations);
LIQ_DEFINE_ERROR(TooFewBins);
LIQ_DEFINE_ERROR(FitNonConvergence);
LIQ_DEFINE_ERROR(SingularSystem);
LIQ_DEFINE_ERROR(NonPositiveSill);
LIQ_DEFINE_ERROR(CrsMismatch);

// raster
LIQ_DEFINE_ERROR(BadMagic);
LIQ_DEFINE_ERROR(TruncatedFile);
LIQ_DEFINE_ERROR(HeaderInconsistent);
LIQ_DEFINE_ERROR(MalformedHeader);
LIQ_DEFINE_ERROR(RaggedRows);
LIQ_DEFINE_ERROR(GridMismatch);
LIQ_DEFINE_ERROR(KindMismatch);

// forward
LIQ_DEFINE_ERROR(MalformedXml);
LIQ_DEFINE_ERROR(MissingPgaField);
LIQ_DEFINE_ERROR(DimensionMismatch);
LIQ_DEFINE_ERROR(NoOverlap);

// evalkit
LIQ_DEFINE_ERROR(Empty);
LIQ_DEFINE_ERROR(TooFew);
LIQ_DEFINE_ERROR(ZeroVariance);
LIQ_DEFINE_ERROR(ConstantField);
LIQ_DEFINE_ERROR(ConstantObserved);

// cli / io
LIQ_DEFINE_ERROR(ConfigError);
LIQ_DEFINE_ERROR(IoError);
LIQ_DEFINE_ERROR(StageError);

#undef LIQ_DEFINE_ERROR

}  // namespace liq

#endif  // LIQ_ERRORS_HPP
