#pragma once

namespace statemon {

/// Execution mode for the data-parallel kernels (episode batches, threshold
/// enumeration, random-chain trials). The serial path is the reference: the
/// parallel path must produce bit-identical results, which the tests assert.
enum class Exec { serial, parallel };

}  // namespace statemon
