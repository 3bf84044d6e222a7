use std::net::SocketAddr;
use std::path::PathBuf;

use clap::Parser;
use thiserror::Error;

/// Upper bound on `Cache-Control: max-age`; resolvers may only cache briefly.
pub const MAX_CACHE_TTL_SECONDS: u32 = 300;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("invalid bind address {0:?}")]
    Bind(String),
    #[error("cache TTL {0}s exceeds the {MAX_CACHE_TTL_SECONDS}s limit")]
    CacheTtl(u32),
    #[error(transparent)]
    Host(#[from] pps_core::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolverConfig {
    pub bind_address: SocketAddr,
    pub base_host: String,
    pub cache_ttl_seconds: u32,
    /// Web-map bundle served under `/assets/`. Without one the resolver
    /// serves a placeholder page.
    pub static_dir: Option<PathBuf>,
}

impl ResolverConfig {
    pub fn new(
        bind_address: SocketAddr,
        base_host: impl Into<String>,
        cache_ttl_seconds: u32,
        static_dir: Option<PathBuf>,
    ) -> Result<Self, ConfigError> {
        let base_host = base_host.into();
        pps_core::validate_host(&base_host)?;
        if cache_ttl_seconds > MAX_CACHE_TTL_SECONDS {
            return Err(ConfigError::CacheTtl(cache_ttl_seconds));
        }
        Ok(Self {
            bind_address,
            base_host,
            cache_ttl_seconds,
            static_dir,
        })
    }

    /// Value of the `Cache-Control` header put on every response.
    pub fn cache_control(&self) -> String {
        match self.cache_ttl_seconds {
            0 => "no-store".to_owned(),
            ttl => format!("public, max-age={ttl}"),
        }
    }
}

impl Default for ResolverConfig {
    fn default() -> Self {
        Self {
            bind_address: SocketAddr::from(([127, 0, 0, 1], 8080)),
            base_host: pps_core::DEFAULT_HOST.to_owned(),
            cache_ttl_seconds: 0,
            static_dir: None,
        }
    }
}

/// Command line of the resolver binary. Flags take precedence over the
/// matching `PINGMARK_*` environment variables.
#[derive(Debug, Clone, Parser)]
#[command(name = "pingmark-resolver", version, about = "Pingmark link resolver")]
pub struct ResolverArgs {
    /// Address to listen on
    #[arg(long = "bind", env = "PINGMARK_BIND", default_value = "127.0.0.1:8080")]
    pub bind: String,
    /// Host name this resolver answers for
    #[arg(long, env = "PINGMARK_BASE_HOST", default_value = pps_core::DEFAULT_HOST)]
    pub base_host: String,
    /// Seconds responses may be cached; 0 disables caching
    #[arg(long, env = "PINGMARK_CACHE_TTL", default_value_t = 0)]
    pub cache_ttl: u32,
    /// Directory holding the web-map bundle
    #[arg(long, env = "PINGMARK_STATIC_DIR")]
    pub static_dir: Option<PathBuf>,
}

impl ResolverArgs {
    pub fn into_config(self) -> Result<ResolverConfig, ConfigError> {
        let bind = self
            .bind
            .parse()
            .map_err(|_| ConfigError::Bind(self.bind.clone()))?;
        ResolverConfig::new(bind, self.base_host, self.cache_ttl, self.static_dir)
    }
}
