# Tests for scripts package