#pragma once

#include <repint/rational.hpp>

#include <vector>

namespace repint {

// Multiplicity representation: mult[i-1] copies of part i, sum i*mult[i-1] = m.
// Stored dense with length m (empty for m = 0).
struct PartitionMulti {
    long m = 0;
    std::vector<long> mult;
};

// Parts representation: non-decreasing positive parts summing to m.
struct PartitionParts {
    long m = 0;
    std::vector<long> parts;
};

void validate(const PartitionMulti& p);
void validate(const PartitionParts& p);

// Enumeration order: lexicographic on the parts representation with the
// largest part first, i.e. m=3 -> [3], [1,2], [1,1,1].
std::vector<PartitionParts> enumerate_parts(long m);
std::vector<PartitionMulti> enumerate_multiplicity(long m);

PartitionParts to_parts(const PartitionMulti& p);
PartitionMulti to_multi(const PartitionParts& p);

Int partition_count(long m);

// Ordered sequences of positive integers summing to m (compositions); the
// recurrent-integral endpoint weights telescope only over the ordered
// family, not over partitions.  m=0 yields the single empty composition.
std::vector<std::vector<long>> enumerate_compositions(long m);

}  // namespace repint
