#include <repint/partitions.hpp>

#include <stdexcept>

namespace repint {

void validate(const PartitionMulti& p) {
    if (p.m < 0) throw std::invalid_argument("partition: m must be non-negative");
    if ((long)p.mult.size() != p.m)
        throw std::invalid_argument("partition: multiplicity vector must have length m");
    long sum = 0;
    for (long i = 1; i <= p.m; ++i) {
        long y = p.mult[i - 1];
        if (y < 0 || y > p.m)
            throw std::invalid_argument("partition: multiplicity out of range");
        sum += i * y;
    }
    if (sum != p.m)
        throw std::invalid_argument("partition: multiplicities do not sum to m");
}

void validate(const PartitionParts& p) {
    if (p.m < 0) throw std::invalid_argument("partition: m must be non-negative");
    long sum = 0;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i] < 1)
            throw std::invalid_argument("partition: parts must be positive");
        if (i > 0 && p.parts[i - 1] > p.parts[i])
            throw std::invalid_argument("partition: parts must be non-decreasing");
        sum += p.parts[i];
    }
    if (sum != p.m)
        throw std::invalid_argument("partition: parts do not sum to m");
}

namespace {

// Emits partitions as non-increasing sequences (largest part first), the
// usual reverse-lexicographic order; each is reversed into canonical
// non-decreasing form before being stored.  m=3 -> [3], [1,2], [1,1,1].
void gen(long rem, long maxpart, std::vector<long>& acc,
         std::vector<PartitionParts>& out, long m) {
    if (rem == 0) {
        PartitionParts p;
        p.m = m;
        p.parts.assign(acc.rbegin(), acc.rend());
        out.push_back(std::move(p));
        return;
    }
    for (long p = std::min(rem, maxpart); p >= 1; --p) {
        acc.push_back(p);
        gen(rem - p, p, acc, out, m);
        acc.pop_back();
    }
}

}  // namespace

std::vector<PartitionParts> enumerate_parts(long m) {
    if (m < 0) throw std::invalid_argument("enumerate_parts: m must be non-negative");
    std::vector<PartitionParts> out;
    std::vector<long> acc;
    gen(m, m, acc, out, m);  // m=0: rem==0 at once, emits the empty partition
    return out;
}

std::vector<PartitionMulti> enumerate_multiplicity(long m) {
    std::vector<PartitionMulti> out;
    for (const auto& p : enumerate_parts(m)) out.push_back(to_multi(p));
    return out;
}

PartitionParts to_parts(const PartitionMulti& p) {
    validate(p);
    PartitionParts q;
    q.m = p.m;
    for (long i = 1; i <= p.m; ++i)
        for (long c = 0; c < p.mult[i - 1]; ++c) q.parts.push_back(i);
    return q;
}

PartitionMulti to_multi(const PartitionParts& p) {
    validate(p);
    PartitionMulti q;
    q.m = p.m;
    q.mult.assign(p.m, 0);
    for (long part : p.parts) ++q.mult[part - 1];
    return q;
}

Int partition_count(long m) {
    if (m < 0) throw std::invalid_argument("partition_count: m must be non-negative");
    // p(m) by the standard coin-style DP over allowed part sizes.
    std::vector<Int> dp(m + 1, 0);
    dp[0] = 1;
    for (long part = 1; part <= m; ++part)
        for (long s = part; s <= m; ++s) dp[s] += dp[s - part];
    return dp[m];
}

std::vector<std::vector<long>> enumerate_compositions(long m) {
    if (m < 0)
        throw std::invalid_argument("enumerate_compositions: m must be non-negative");
    std::vector<std::vector<long>> out;
    std::vector<long> acc;
    // First-part recursion: 2^(m-1) compositions for m >= 1.
    auto rec = [&](auto&& self, long rem) -> void {
        if (rem == 0) {
            out.push_back(acc);
            return;
        }
        for (long p = 1; p <= rem; ++p) {
            acc.push_back(p);
            self(self, rem - p);
            acc.pop_back();
        }
    };
    rec(rec, m);
    return out;
}

}  // namespace repint
