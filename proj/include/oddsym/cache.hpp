#pragma once

#include <map>
#include <mutex>
#include <utility>

namespace oddsym {

// Mutex-guarded memo table. Values are computed outside the lock, so a
// computation may recurse into the same cache; references stay valid
// because std::map never relocates nodes.
template <class K, class V>
class SharedCache
{
public:
    template <class F>
    const V &get(const K &key, F &&compute)
    {
        {
            std::lock_guard<std::mutex> lock(m_mutex);
            if (auto it = m_map.find(key); it != m_map.end())
                return it->second;
        }
        V value = compute();
        std::lock_guard<std::mutex> lock(m_mutex);
        return m_map.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::mutex m_mutex;
    std::map<K, V> m_map;
};

} // namespace oddsym
