#pragma once

#include <stdexcept>

namespace scannav {

// Base class for all domain errors raised by the library.
struct ScanNavError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scan requested from a position whose clearance ball is not inside free space.
struct InvalidScanCenter : ScanNavError {
  using ScanNavError::ScanNavError;
};

// Erosion of the scan polygon left no usable safe region around the center.
struct EmptySafeRegion : ScanNavError {
  using ScanNavError::ScanNavError;
};

// A feedback law was evaluated outside its domain (state or goal outside the
// required safe polygon).
struct OutOfDomain : ScanNavError {
  using ScanNavError::ScanNavError;
};

// No scan's shrunk safe polygon contains the requested goal.
struct GoalUnreachable : ScanNavError {
  using ScanNavError::ScanNavError;
};

// No scan with finite planned cost contains the query position.
struct NoActiveScan : ScanNavError {
  using ScanNavError::ScanNavError;
};

// A precondition on pairwise center distances was violated.
struct HypothesisViolated : ScanNavError {
  using ScanNavError::ScanNavError;
};

// Exploration exceeded its step cap without reaching completion.
struct IterationCapExceeded : ScanNavError {
  using ScanNavError::ScanNavError;
};

// Malformed input file (world, scan set, graph, config).
struct ParseError : ScanNavError {
  using ScanNavError::ScanNavError;
};

}  // namespace scannav
