# (C) 2026 kdyck contributors
