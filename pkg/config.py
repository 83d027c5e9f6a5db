"""Configuration management using pydantic-settings."""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="ALGSER_",
        extra="ignore",
    )

    # Default truncation bounds
    default_series_degree: int = 30
    default_gb_degree: int = 8
    default_chain_degree: int = 6
    default_chain_max_t: int = 3

    # Guards (exceeding them exits with code 3 unless --force)
    gb_max_degree: int = 12
    series_max_degree: int = 400
    oracle_max_letters: int = 9
    oracle_max_degree: int = 6
    chain_max_t: int = 6
    langfun_enumerate_max_degree: int = 14
    # ALGSER_GUARD_OVERRIDE=1 behaves like --force on every command
    guard_override: bool = False

    # Grammar fixed point: multiply the (N + 2) round budget by |nonterminals|
    cfg_rounds_per_nonterminal: bool = True

    # Logging (stdout is reserved for results, console logs go to stderr)
    log_level: str = "WARNING"
    log_format: str = "plain"  # plain | json
    log_dir: str = "logs"  # relative paths resolve from current working directory
    log_file_enabled: bool = False
    log_error_file_enabled: bool = True
    log_file_max_bytes: int = 20 * 1024 * 1024
    log_file_backup_count: int = 5
    log_queue_enabled: bool = True
    log_queue_size: int = 20000
    log_queue_drop_notice_every: int = 1000
    log_gb_trace_enabled: bool = False
    log_gb_trace_level: str = "DEBUG"

    @property
    def guards_disabled(self) -> bool:
        return self.guard_override


settings = Settings()
