from collections import OrderedDict

# Size-limited mapping used to memoize oracle evaluations. Oldest insertions
# are evicted first once size_limit is exceeded.


class BoundedCache(OrderedDict):

    def __init__(self, *args, **kwds):
        self.size_limit = kwds.pop("size_limit", None)
        self.hits = 0
        self.misses = 0
        self.owner = None
        OrderedDict.__init__(self, *args, **kwds)
        self._check_size_limit()

    def __setitem__(self, key, value):
        OrderedDict.__setitem__(self, key, value)
        self._check_size_limit()

    def bind(self, owner):
        """Entries are only valid for one owner (a trace); switching clears them."""
        if self.owner is not owner:
            self.clear()
            self.owner = owner

    def lookup(self, key, default=None):
        """Like ``get`` but keeps hit/miss statistics."""
        if key in self:
            self.hits += 1
            return OrderedDict.__getitem__(self, key)
        self.misses += 1
        return default

    def _check_size_limit(self):
        if self.size_limit is not None:
            while len(self) > self.size_limit:
                self.popitem(last=False)


def build_oracle_cache(config=None):
    """Return a fresh oracle cache, or None when caching is disabled."""
    if config is None:
        from lib.lpt.conf.Configuration import get_config
        config = get_config()
    if not config.cache_enabled():
        return None
    return BoundedCache(size_limit=config.cache_size())
