#pragma once

namespace retrieval {

/// Worker count for internally parallel operations. 0 means auto: the
/// RETRIEVAL_THREADS environment variable if set, else hardware concurrency.
unsigned resolve_threads(unsigned requested);

}  // namespace retrieval
