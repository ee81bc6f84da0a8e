#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace pvh {

using Bytes = std::vector<uint8_t>;

// Cursor-style writer appending big-endian integers to a byte buffer.
class ByteWriter {
public:
    explicit ByteWriter(Bytes& out) : out_(out) {}

    void u8(uint8_t v) { out_.push_back(v); }
    void u16(uint16_t v) {
        out_.push_back(static_cast<uint8_t>(v >> 8));
        out_.push_back(static_cast<uint8_t>(v));
    }
    void u32(uint32_t v) {
        out_.push_back(static_cast<uint8_t>(v >> 24));
        out_.push_back(static_cast<uint8_t>(v >> 16));
        out_.push_back(static_cast<uint8_t>(v >> 8));
        out_.push_back(static_cast<uint8_t>(v));
    }
    void u64(uint64_t v) {
        u32(static_cast<uint32_t>(v >> 32));
        u32(static_cast<uint32_t>(v));
    }
    void raw(const uint8_t* data, size_t n) { out_.insert(out_.end(), data, data + n); }
    void raw(const Bytes& b) { raw(b.data(), b.size()); }

private:
    Bytes& out_;
};

// Bounds-checked reader over a byte buffer. Every accessor reports
// truncation instead of reading past the end.
class ByteReader {
public:
    ByteReader(const uint8_t* data, size_t size) : data_(data), size_(size) {}
    explicit ByteReader(const Bytes& b) : data_(b.data()), size_(b.size()) {}

    size_t offset() const { return off_; }
    size_t remaining() const { return size_ - off_; }
    bool can_read(size_t n) const { return off_ + n <= size_; }
    const uint8_t* cursor() const { return data_ + off_; }

    bool u8(uint8_t& v) {
        if (!can_read(1)) return false;
        v = data_[off_++];
        return true;
    }
    bool u16(uint16_t& v) {
        if (!can_read(2)) return false;
        v = static_cast<uint16_t>((data_[off_] << 8) | data_[off_ + 1]);
        off_ += 2;
        return true;
    }
    bool u32(uint32_t& v) {
        if (!can_read(4)) return false;
        v = (static_cast<uint32_t>(data_[off_]) << 24) |
            (static_cast<uint32_t>(data_[off_ + 1]) << 16) |
            (static_cast<uint32_t>(data_[off_ + 2]) << 8) |
            static_cast<uint32_t>(data_[off_ + 3]);
        off_ += 4;
        return true;
    }
    bool u64(uint64_t& v) {
        uint32_t hi = 0, lo = 0;
        if (!u32(hi) || !u32(lo)) return false;
        v = (static_cast<uint64_t>(hi) << 32) | lo;
        return true;
    }
    bool raw(uint8_t* dst, size_t n) {
        if (!can_read(n)) return false;
        std::memcpy(dst, data_ + off_, n);
        off_ += n;
        return true;
    }
    bool skip(size_t n) {
        if (!can_read(n)) return false;
        off_ += n;
        return true;
    }

private:
    const uint8_t* data_;
    size_t size_;
    size_t off_ = 0;
};

std::string to_hex(const Bytes& b);

} // namespace pvh
