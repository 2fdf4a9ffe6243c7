from aristo.settings import settings_proxy

settings_proxy.ensure_default()
